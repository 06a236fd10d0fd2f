"""
Extending a functional dominated by the l1 norm
===============================================

f(t, t) = 0 on the diagonal of the plane, dominated by |x| + |y|.  The value
of an extension at each tracked vector is pinned down one dyadic halving at
a time, and every step keeps the enclosures compatible with the linear
relations among the tracked vectors.
"""

from fractions import Fraction

from weakchoice.applications import HahnBanachInstance, SublinearFunctional, hahn_banach_solve

# |x| + |y| is the maximum of these four linear forms
l1 = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
p = SublinearFunctional(l1)
print("p(3, -4) =", p((3, -4)))

tracked = [(1, 0), (0, 1), (1, 1)]
inst = HahnBanachInstance(2, l1, [(1, 1)], [0], tracked, depth=12)
print("detected sums:", inst.sums)

for depth in (0, 1, 2, 4, 8, 12):
    enc = hahn_banach_solve(inst, depth=depth)
    cells = ", ".join(f"[{g.lo}, {g.hi}]" for g in enc.intervals)
    print(f"depth {depth:2}: {cells}")

enc = hahn_banach_solve(inst)
print("widths:", [str(w) for w in enc.widths()])
print("all exact:", all(isinstance(w, Fraction) for w in enc.widths()))

# the enclosures shrink towards one admissible extension
for x in tracked:
    print(f"  extension at {x}: {enc.extension(x)}")
