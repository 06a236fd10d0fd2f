"""
Orders, choice functions and S-consistent choice
================================================

Each of these is found as a transversal: one antichain per finite piece of
the problem, one compatible pick from each.
"""

from weakchoice.applications import (
    SConsistentInstance,
    choice_function_poset,
    koenig_choice,
    ordering_poset,
    ordering_principle,
    s_consistent_choice,
    union_linear_order,
)
from weakchoice.errors import Unsatisfiable

# linear orders of a finite set: conditions are orderings of subsets,
# extension means "restricts to"
order, family = ordering_poset("xyz", all_subsets=True)
print("conditions:", len(order))
for dom, antichain in zip(family.names, family):
    print(f"  orderings of {''.join(dom) or '{}'}: {len(antichain)}")
print("chosen order:", " < ".join(ordering_principle("xyz")))

# orders of disjoint blocks glue into one order, block by block
print("glued:", union_linear_order([["a", "b"], ["c"]], [["b", "a"], ["c"]]))

# a choice function for a finite family of nonempty sets, twice over
family = [["p", "q"], ["r"], ["s", "t", "u"]]
print("choice via generic filter:", choice_function_poset(family))
print("choice via prefixes:", koenig_choice(family))

# pick from each A_i so that every two picks are related
inst = SConsistentInstance(
    {1: ["a", "b"], 2: ["b", "c"], 3: ["a", "c"]},
    [("a", "a"), ("b", "b"), ("c", "c"), ("a", "c")],
)
print("S-consistent choice:", s_consistent_choice(inst))

# with only the diagonal, any two picks must agree, and no single letter is
# in all three sets
odd = SConsistentInstance(inst.sets, [("a", "a"), ("b", "b"), ("c", "c")])
try:
    s_consistent_choice(odd)
except Unsatisfiable as exc:
    print("no S-consistent choice; first failing indices:", exc.witness)
