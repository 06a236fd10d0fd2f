"""Choice functions obtained from generic objects.

Partial choice functions are tuples of ``(index, value)`` pairs sorted by
index; a family member's candidate values keep their input order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from ..errors import CapExceeded, EmptyMember, Unsatisfiable
from ..genericity import find_generic_filter
from ..order import order_from_predicate
from ..reduction import AntichainFamily, solve_two_linked_generic
from .ordering import generating_domains

CHOICE_CAP = 4096


def _extends(p: tuple, q: tuple) -> bool:
    return set(q) <= set(p)


def _members(family: Sequence[Sequence]) -> list[tuple]:
    members = [tuple(dict.fromkeys(x)) if not isinstance(x, (set, frozenset)) else tuple(sorted(x)) for x in family]
    for i, x in enumerate(members):
        if not x:
            raise EmptyMember(f"member {i} is empty")
    return members


def _union_of(filter_members) -> dict:
    out: dict = {}
    for p in filter_members:
        for i, v in p:
            assert out.setdefault(i, v) == v
    return out


def choice_function_poset(family: Sequence[Sequence], cap: int = CHOICE_CAP) -> tuple:
    """Choice via a filter meeting each ``{f : i in dom f}``.

    The order is every partial choice function under reverse inclusion.
    Returns the chosen element of each member, in member order.
    """
    members = _members(family)
    size = 1
    for x in members:
        size *= len(x) + 1
    if size > cap:
        raise CapExceeded(f"{size} partial choice functions exceeds cap {cap}")
    elements = [
        tuple(zip(dom, values))
        for k in range(len(members) + 1)
        for dom in itertools.combinations(range(len(members)), k)
        for values in itertools.product(*(members[i] for i in dom))
    ]
    order = order_from_predicate(elements, _extends, kind="poset", max_size=None)
    dense = [[p for p in elements if i in dict(p)] for i in range(len(members))]
    g = find_generic_filter(order, dense)
    for d in dense:
        assert order.is_dense(d)
    h = _union_of(g.members.labels)
    choice = tuple(h[i] for i in range(len(members)))
    assert all(c in x for c, x in zip(choice, members))
    return choice


def koenig_choice(family: Sequence[Sequence], cap: int = CHOICE_CAP) -> tuple:
    """Choice via prefix functions: conditions choose for members ``0..n-1``,
    and the dense sets ask for index ``n`` to be decided."""
    members = _members(family)
    elements = [()]
    for n in range(len(members)):
        elements += [tuple(enumerate(vals)) for vals in itertools.product(*members[: n + 1])]
        if len(elements) > cap:
            raise CapExceeded(f"more than {cap} prefix functions")
    order = order_from_predicate(elements, _extends, kind="poset", max_size=None)
    dense = [[p for p in elements if len(p) > n] for n in range(len(members))]
    g = find_generic_filter(order, dense)
    h = _union_of(g.members.labels)
    choice = tuple(h[i] for i in range(len(members)))
    assert all(c in x for c, x in zip(choice, members))
    return choice


@dataclass(frozen=True)
class SConsistentInstance:
    """Finite sets ``A_i`` indexed by ``I`` and a symmetric relation on values.

    ``relation`` is stored symmetrically closed.
    """

    sets: Mapping[Hashable, tuple]
    relation: frozenset

    def __init__(self, sets: Mapping[Hashable, Sequence], relation=()):
        clean = {}
        for i, values in sets.items():
            values = tuple(dict.fromkeys(values))
            if not values:
                raise EmptyMember(f"A_{i} is empty")
            clean[i] = values
        rel = set()
        for u, v in relation:
            rel.add((u, v))
            rel.add((v, u))
        object.__setattr__(self, "sets", clean)
        object.__setattr__(self, "relation", frozenset(rel))

    @property
    def indices(self) -> tuple:
        return tuple(self.sets)

    def related(self, u, v) -> bool:
        return (u, v) in self.relation

    def is_s_consistent(self, assignment: Mapping) -> bool:
        vals = list(assignment.values())
        return all(self.related(u, v) for u in vals for v in vals)

    def choices_on(self, dom: Sequence) -> list[tuple]:
        """S-consistent choice functions on ``dom`` as sorted ``(i, value)`` tuples."""
        out = []
        for values in itertools.product(*(self.sets[i] for i in dom)):
            if all(self.related(u, v) for u in values for v in values):
                out.append(tuple(zip(dom, values)))
        return out


def s_consistent_choice(inst: SConsistentInstance, all_subsets: bool = False, cap: int = 10) -> dict:
    """An S-consistent choice function on every index, from a 2-linked set
    meeting the antichains of S-consistent choices on the generating domains.

    Raises Unsatisfiable whose ``witness`` is the first generating domain
    with no S-consistent choice.
    """
    index = inst.indices
    if len(index) > cap:
        raise CapExceeded(f"{len(index)} indices exceeds cap {cap}")
    elements = [
        p for k in range(len(index) + 1) for dom in itertools.combinations(index, k) for p in inst.choices_on(dom)
    ]
    doms = generating_domains(index, all_subsets)
    for dom in doms:
        if not inst.choices_on(dom):
            raise Unsatisfiable(dom, f"no S-consistent choice on {list(dom)}", witness=dom)
    order = order_from_predicate(elements, _extends, kind="poset", max_size=None)
    family = AntichainFamily(order, tuple(order.subset(inst.choices_on(dom)) for dom in doms), tuple(doms))
    g = solve_two_linked_generic(order, family)
    f = _union_of(g.members.labels)
    assert set(f) == set(index) and inst.is_s_consistent(f)
    return {i: f[i] for i in index}
