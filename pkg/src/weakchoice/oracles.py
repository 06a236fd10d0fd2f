"""Brute-force reference implementations.

Each function here restates a definition as directly as possible and
enumerates everything.  They exist to cross-check the real solvers and are
only usable on tiny inputs.
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from .errors import CapExceeded
from .mess import CNF, BinaryMess, PartialBinaryFunction, partial_functions, total_functions
from .order import FinitePreorder, bits

BRUTE_CAP = 16


def _check(n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(f"brute force is capped at {cap}, got {n}")


def compatible(order: FinitePreorder, i: int, j: int) -> bool:
    return any(order.up_mask(r) >> i & 1 and order.up_mask(r) >> j & 1 for r in range(len(order)))


def two_linked(order: FinitePreorder, mask: int) -> bool:
    members = list(bits(mask))
    return all(compatible(order, i, j) for i, j in itertools.combinations(members, 2))


def generic_two_linked_sets(order: FinitePreorder, antichains: Sequence, cap: int = BRUTE_CAP) -> list[int]:
    """Every 2-linked subset (as a bitmask) meeting each antichain."""
    _check(len(order), cap)
    masks = [order.mask_of(a) for a in antichains]
    return [g for g in range(1 << len(order)) if all(g & a for a in masks) and two_linked(order, g)]


def transversals(order: FinitePreorder, antichains: Sequence) -> list[tuple[int, ...]]:
    """Every pairwise-compatible choice of one element per antichain, in
    lexicographic order of element indices."""
    pools = [list(bits(order.mask_of(a))) for a in antichains]
    return [
        pick
        for pick in itertools.product(*pools)
        if all(compatible(order, i, j) for i, j in itertools.combinations(pick, 2))
    ]


def dense_sets(order: FinitePreorder, cap: int = 12) -> list[int]:
    _check(len(order), cap)
    n = len(order)
    return [
        d for d in range(1 << n) if all(order.down_mask(p) & d for p in range(n))
    ]


def is_filter(order: FinitePreorder, mask: int) -> bool:
    for p in bits(mask):
        if order.up_mask(p) & ~mask:
            return False
    for p, q in itertools.combinations(bits(mask), 2):
        if not order.down_mask(p) & order.down_mask(q) & mask:
            return False
    return True


def generic_filters(order: FinitePreorder, dense: Sequence | None = None, cap: int = 12) -> list[int]:
    """Filters meeting every set in ``dense`` (default: every dense set)."""
    _check(len(order), cap)
    targets = dense_sets(order, cap) if dense is None else [order.mask_of(d) for d in dense]
    return [g for g in range(1 << len(order)) if is_filter(order, g) and all(g & d for d in targets)]


def satisfying_assignments(cnf: CNF) -> list[dict]:
    """Truth-table enumeration, variables 1..n, all-zero first."""
    out = []
    for values in itertools.product((0, 1), repeat=cnf.num_vars):
        a = dict(zip(range(1, cnf.num_vars + 1), values))
        if cnf.satisfied_by(a):
            out.append(a)
    return out


def consistent_functions(mess: BinaryMess) -> list[PartialBinaryFunction]:
    """Total functions all of whose restrictions are members, straight from
    the definition."""
    _check(len(mess.ground), 8)
    out = []
    for f in total_functions(mess.ground):
        if all(f.restrict(dom) in mess for dom in _subsets(mess.ground)):
            out.append(f)
    return out


def _subsets(ground):
    for k in range(len(ground) + 1):
        yield from itertools.combinations(ground, k)


def mess_members(mess: BinaryMess) -> set[PartialBinaryFunction]:
    return {s for s in partial_functions(mess.ground) if s in mess}


def s_consistent_choices(sets: Mapping, relation) -> list[dict]:
    """All choice functions ``f`` with ``f(i) S f(j)`` for every ``i, j``."""
    rel = set(relation) | {(v, u) for u, v in relation}
    index = list(sets)
    out = []
    for values in itertools.product(*(sets[i] for i in index)):
        if all((u, v) in rel for u in values for v in values):
            out.append(dict(zip(index, values)))
    return out
