"""
From clauses to messes to transversals
======================================

A CNF formula gives a binary mess: the partial assignments that satisfy
every clause they fully decide.  Its consistent functions are the models.
The same mess becomes an order plus a family of antichains, and a
transversal of that family recovers a model.
"""

from weakchoice import (
    CNF,
    build_order,
    consistent_from_two_linked,
    is_centred,
    mess_from_cnf,
    poset_from_mess,
    solve_two_linked_generic,
)
from weakchoice.errors import CoverageGap, Unsatisfiable

# (x1 or x2) and (not x1 or x3)
cnf = CNF(3, ((1, 2), (-1, 3)))
mess = mess_from_cnf(cnf)
models = mess.consistent_functions()
print("models:", [dict(f) for f in models])

# the order of restrictions, one antichain per finite domain
order, family = poset_from_mess(mess.materialize())
print("conditions:", len(order), "antichains:", len(family))
print("centred:", is_centred(order, family))

g = solve_two_linked_generic(order, family)
f = consistent_from_two_linked(mess, g.members)
print("model read off the transversal:", dict(f))

# a contradiction leaves some domain with no member at all
try:
    mess_from_cnf(CNF(1, ((1,), (-1,)))).consistent_functions()
except CoverageGap as exc:
    print("no member on domain", exc.domain)

# centredness is sufficient but not necessary: three conditions that are
# pairwise compatible but have no common extension
order = build_order(
    ["a", "b", "c", "ab", "bc", "ac"],
    [("ab", "a"), ("ab", "b"), ("bc", "b"), ("bc", "c"), ("ac", "a"), ("ac", "c")],
)
singletons = [["a"], ["b"], ["c"]]
print("centred:", is_centred(order, singletons))
print("transversal:", solve_two_linked_generic(order, singletons).members.labels)

# two incompatible singletons have no transversal; the conflict names them
try:
    solve_two_linked_generic(order, [["ab"], ["bc"]])
except Unsatisfiable as exc:
    print("unsatisfiable, conflict between antichains", exc.conflict)
