"""
Generic filters on a small order
================================

Dense sets, maximal antichains and the filters that meet all of them, on the
three-element "fork" where a and b both extend c.
"""

from weakchoice import (
    build_order,
    check_lemma_2_2,
    find_generic_filter,
    fully_generic_filters,
    max_antichain,
    maximal_antichains,
)
from weakchoice.errors import NotDense
from weakchoice.genericity import dense_subsets

# a <= c and b <= c: a and b are incompatible extensions of c
fork = build_order("abc", [("a", "c"), ("b", "c")])
print("pairs:", fork.pairs())
print("minimal:", fork.minimal_elements().labels)
print("semi-separative:", fork.is_semi_separative())

# every dense set contains a maximal antichain, so the antichains are
# enough to test genericity
print("dense sets:", [d.labels for d in dense_subsets(fork)])
print("maximal antichains:", [a.labels for a in maximal_antichains(fork)])

# the filters meeting every dense set are the up-sets of minimal elements
print("fully generic:", [g.labels for g in fully_generic_filters(fork)])
print("basis agrees with brute force:",
      fully_generic_filters(fork) == fully_generic_filters(fork, naive=True))
print("minimal up-sets are exactly the generic filters:", check_lemma_2_2(fork))

# build a filter meeting a listed family by walking down a chain
g = find_generic_filter(fork, [["b", "a"], ["a", "b", "c"]])
print("generic filter:", g.members.labels, "certificates:", g.certificates)

# {c} is not dense: a has no extension in it
try:
    find_generic_filter(fork, [["c"]])
except NotDense as exc:
    print("rejected:", exc)

# a widest antichain, used when the order is only preordered
print("max antichain:", max_antichain(fork).labels)
