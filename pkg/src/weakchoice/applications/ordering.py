"""Linear orders assembled from finite approximations.

A linear order on a finite set is represented by the tuple of its elements
from least to greatest.
"""

from __future__ import annotations

import itertools
from typing import Hashable, Sequence

from ..errors import BlocksOverlap, CapExceeded
from ..order import FinitePoset, order_from_predicate
from ..reduction import AntichainFamily, solve_two_linked_generic

ORDERING_CAP = 6


def _restricts_to(longer: tuple, shorter: tuple) -> bool:
    """True iff ``shorter`` is ``longer`` restricted to the elements of ``shorter``."""
    keep = set(shorter)
    return keep <= set(longer) and tuple(x for x in longer if x in keep) == shorter


def generating_domains(ground: Sequence, all_subsets: bool = False) -> list[tuple]:
    """Index sets whose antichains are imposed: every subset of size <= 2
    plus the whole set, or every subset with ``all_subsets``."""
    sizes = range(len(ground) + 1) if all_subsets else [s for s in (0, 1, 2) if s <= len(ground)]
    doms = [c for s in sizes for c in itertools.combinations(ground, s)]
    full = tuple(ground)
    if full not in doms:
        doms.append(full)
    return doms


def ordering_poset(ground: Sequence[Hashable], all_subsets: bool = False, cap: int = ORDERING_CAP):
    """Linear orders on subsets of ``ground`` under reverse inclusion, and
    the antichains of all linear orders on each generating domain."""
    ground = tuple(ground)
    if len(set(ground)) != len(ground):
        raise ValueError("elements must be distinct")
    if len(ground) > cap:
        raise CapExceeded(f"{len(ground)} elements exceeds the ordering cap {cap}")
    elements = [
        perm
        for size in range(len(ground) + 1)
        for dom in itertools.combinations(ground, size)
        for perm in itertools.permutations(dom)
    ]
    order = order_from_predicate(elements, _restricts_to, kind="poset", max_size=None)
    doms = generating_domains(ground, all_subsets)
    family = AntichainFamily(
        order,
        tuple(order.subset(itertools.permutations(dom)) for dom in doms),
        tuple(doms),
    )
    return order, family


def _relation(orders) -> set[tuple]:
    rel = set()
    for seq in orders:
        for i, x in enumerate(seq):
            for y in seq[i:]:
                rel.add((x, y))
    return rel


def is_linear_order(relation: set[tuple], ground: Sequence) -> bool:
    """Reflexive, antisymmetric, transitive and total on ``ground``."""
    for x in ground:
        if (x, x) not in relation:
            return False
    for x, y in itertools.product(ground, repeat=2):
        if x != y and ((x, y) in relation) == ((y, x) in relation):
            return False
    for x, y, z in itertools.product(ground, repeat=3):
        if (x, y) in relation and (y, z) in relation and (x, z) not in relation:
            return False
    return all(x in ground and y in ground for x, y in relation)


def ordering_principle(ground: Sequence[Hashable], all_subsets: bool = False, cap: int = ORDERING_CAP) -> tuple:
    """A linear order on ``ground`` as the union of a 2-linked generic set of
    finite linear orders; returned least element first."""
    order, family = ordering_poset(ground, all_subsets, cap)
    g = solve_two_linked_generic(order, family)
    relation = _relation(g.members.labels)
    assert is_linear_order(relation, tuple(ground))
    return tuple(sorted(ground, key=lambda x: sum((y, x) in relation for y in ground)))


def union_linear_order(blocks: Sequence[Sequence], block_orders: Sequence[Sequence]) -> tuple:
    """Order the union of disjoint blocks: by block position first, then by
    the block's own order.  ``blocks`` is listed in block order."""
    if len(blocks) != len(block_orders):
        raise ValueError("one order per block")
    home = {}
    for b, block in enumerate(blocks):
        for x in block:
            if x in home:
                raise BlocksOverlap(f"{x!r} lies in blocks {home[x]} and {b}")
            home[x] = b
    rank = {}
    for b, (block, seq) in enumerate(zip(blocks, block_orders)):
        if sorted(map(repr, seq)) != sorted(map(repr, block)) or len(set(seq)) != len(seq):
            raise ValueError(f"order for block {b} is not a permutation of it")
        for pos, x in enumerate(seq):
            rank[x] = pos

    def precedes(y, z) -> bool:
        return home[y] < home[z] or (home[y] == home[z] and rank[y] <= rank[z])

    union = list(home)
    relation = {(y, z) for y in union for z in union if precedes(y, z)}
    assert is_linear_order(relation, union)
    return tuple(sorted(union, key=lambda x: (home[x], rank[x])))
