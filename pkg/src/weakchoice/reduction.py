"""Antichain families, centredness, and the two-way translation between
2-linked generic sets and functions consistent with a binary mess.

The solver looks for a *transversal*: one element from each antichain, all
pairwise compatible.  A transversal is itself 2-linked and generic, and every
2-linked generic set contains one, so satisfiability is the same question.
It is multicoloured clique on the compatibility graph, hence the exact
backtracking search in :class:`TransversalSolver`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    CoverageGap,
    InvalidFamily,
    NotCentred,
    NotConsistent,
    NotGeneric,
    NotLinked,
    Unsatisfiable,
)
from .mess import BinaryMess, PartialBinaryFunction, domains
from .order import ElementSubset, FinitePoset, FinitePreorder, bits, order_from_predicate

MESS_POSET_CAP = 256


@dataclass(frozen=True)
class AntichainFamily:
    """An ordered list of antichains of ``order`` (validated on construction)."""

    order: FinitePreorder
    members: tuple[ElementSubset, ...]
    names: tuple = ()

    def __post_init__(self):
        members = tuple(
            m if isinstance(m, ElementSubset) else self.order.subset(m) for m in self.members
        )
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "names", tuple(self.names))
        if self.names and len(self.names) != len(members):
            raise ValueError("names and members differ in length")
        for i, a in enumerate(members):
            if not self.order.is_antichain(a):
                raise InvalidFamily(f"member {i} ({list(a.labels)}) is not an antichain")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


@dataclass(frozen=True)
class LinkedGenericSet:
    """A 2-linked set with one witness per antichain of the family it meets."""

    order: FinitePreorder
    members: ElementSubset
    certificates: tuple[tuple[int, object], ...] = field(default=())

    def validate(self, family: AntichainFamily) -> None:
        assert self.order.is_two_linked(self.members), "not 2-linked"
        assert len(self.certificates) == len(family)
        for (i, witness), a in zip(self.certificates, family):
            assert witness in self.members and witness in a, (i, witness)


def _as_family(order, family) -> AntichainFamily:
    if isinstance(family, AntichainFamily):
        return family
    return AntichainFamily(order, tuple(family))


def _certificates(order, family: AntichainFamily, mask: int):
    certs = []
    for i, a in enumerate(family):
        hit = a.mask & mask
        if not hit:
            return None
        certs.append((i, order.label(next(bits(hit)))))
    return tuple(certs)


# -- centredness ----------------------------------------------------------------


def _centred_witness_index(order: FinitePreorder, family: AntichainFamily):
    for p in range(len(order)):
        up = order.up_mask(p)
        if all(a.mask & up for a in family):
            return p
    return None


def is_centred(order: FinitePreorder, family) -> bool:
    """Some single condition lies below a member of every antichain.

    For a finite family this is the same as asking it of every finite
    subfamily (see :func:`is_centred_by_subfamilies`).
    """
    family = _as_family(order, family)
    if not len(family):
        return True
    return _centred_witness_index(order, family) is not None


def is_centred_by_subfamilies(order: FinitePreorder, family) -> bool:
    """Literal check: every nonempty subfamily has a common lower bound of a selection."""
    family = _as_family(order, family)
    members = list(family)
    for size in range(1, len(members) + 1):
        for sub in itertools.combinations(members, size):
            ok = any(
                all(order.up_mask(p) & a.mask for a in sub) for p in range(len(order))
            )
            if not ok:
                return False
    return True


def centred_witness(order: FinitePreorder, family):
    """``(p, selections)``: the first witness and, per antichain, the first member above it."""
    family = _as_family(order, family)
    if not len(family):
        if not len(order):
            raise NotCentred("empty order has no witness")
        return order.label(0), ()
    p = _centred_witness_index(order, family)
    if p is None:
        raise NotCentred("family is not centred")
    up = order.up_mask(p)
    return order.label(p), tuple(order.label(next(bits(a.mask & up))) for a in family)


# -- poset + antichains  ->  mess ----------------------------------------------


class PosetMess(BinaryMess):
    """The intensional mess over the elements of an order: the 1-valued
    elements are pairwise compatible, and every antichain inside the domain
    has a 1-valued element."""

    def __init__(self, order: FinitePreorder, family: AntichainFamily, materialize_cap: int = 12):
        self.order = order
        self.family = family
        self._antichain_sets = [frozenset(a.labels) for a in family]
        super().__init__(order.labels, predicate=self._member, materialize_cap=materialize_cap)

    def _member(self, m: PartialBinaryFunction) -> bool:
        ones = self.order.mask_of(m.ones())
        if not self.order.is_two_linked(self.order.subset_from_mask(ones)):
            return False
        dom = m.domain
        for a in self._antichain_sets:
            if a <= dom and not any(m[x] == 1 for x in a):
                return False
        return True

    def coverage_witness(self, labels: Iterable) -> PartialBinaryFunction:
        """A member with domain ``labels``: 1 exactly on a centred selection
        for the antichains lying inside ``labels``."""
        labels = set(labels)
        inside = [a for a in self.family if set(a.labels) <= labels]
        try:
            _, selection = centred_witness(self.order, inside)
        except NotCentred:
            raise CoverageGap(
                tuple(x for x in self.ground if x in labels), "antichains inside domain are not centred"
            ) from None
        chosen = set(selection)
        m = PartialBinaryFunction((x, int(x in chosen)) for x in self.ground if x in labels)
        assert m in self
        return m


def mess_from_poset(order: FinitePreorder, family) -> PosetMess:
    return PosetMess(order, _as_family(order, family))


def two_linked_from_consistent(mess: PosetMess, f) -> LinkedGenericSet:
    """``G = f^-1(1)``, with the first hit of each antichain as certificate."""
    f = f if isinstance(f, PartialBinaryFunction) else PartialBinaryFunction(f)
    if not mess.is_consistent(f, exhaustive=len(mess.ground) <= 8):
        raise NotConsistent(f"{f!r} is not consistent with the mess")
    order = mess.order
    g = order.subset(f.ones())
    certs = _certificates(order, mess.family, g.mask)
    assert certs is not None and order.is_two_linked(g)
    return LinkedGenericSet(order, g, certs)


# -- mess  ->  poset + antichains ----------------------------------------------


def poset_from_mess(mess: BinaryMess, cap: int = MESS_POSET_CAP) -> tuple[FinitePoset, AntichainFamily]:
    """Members ordered by reverse inclusion, with one antichain per domain.

    Element labels are the members themselves (canonical member order); the
    antichain for domain F holds the members with domain exactly F, listed
    in canonical domain order with F named by its label tuple.
    """
    members = mess.members()
    if len(members) > cap:
        raise CapExceeded(f"{len(members)} members exceeds the poset cap {cap}")
    order = order_from_predicate(members, lambda m, n: m.extends(n), kind="poset", max_size=None)
    names, antichains = [], []
    for dom in domains(mess.ground):
        level = [m for m in members if m.domain == frozenset(dom)]
        assert len(level) <= 2 ** len(dom)
        names.append(dom)
        antichains.append(order.subset(level))
    family = AntichainFamily(order, tuple(antichains), tuple(names))
    assert is_centred(order, family)
    return order, family


def restriction_set(order: FinitePreorder, f: PartialBinaryFunction) -> ElementSubset:
    """All restrictions of ``f`` that are elements of the mess poset."""
    return order.subset(m for m in order.labels if f.extends(m))


def consistent_from_two_linked(mess: BinaryMess, g) -> PartialBinaryFunction:
    """``f = union of G`` for a 2-linked set meeting every domain antichain
    of the mess poset.  Also checks ``G`` meets each such antichain in exactly
    ``f`` restricted to that domain."""
    if isinstance(g, LinkedGenericSet):
        g = g.members
    order = g.order
    if not order.is_two_linked(g):
        raise NotLinked("set is not 2-linked")
    chosen: list[PartialBinaryFunction] = list(g.labels)
    for x in mess.ground:
        if not any(m.domain == {x} for m in chosen):
            raise NotGeneric(f"set misses the antichain for domain {{{x!r}}}")
    union: dict = {}
    for m in chosen:
        for k, v in m.items():
            # 2-linked members agree wherever both are defined
            assert union.setdefault(k, v) == v
    f = PartialBinaryFunction(union)
    for dom in domains(mess.ground):
        level = [m for m in chosen if m.domain == frozenset(dom)]
        if not level:
            raise NotGeneric(f"set misses the antichain for domain {list(dom)}")
        assert level == [f.restrict(dom)]
    if not mess.is_consistent(f, exhaustive=len(mess.ground) <= 8):
        raise NotConsistent("union is not consistent")
    return f


# -- transversal solver ------------------------------------------------------------


class TransversalSolver:
    """Incremental exact search for a pairwise-compatible transversal.

    Antichains are added one at a time with :meth:`add`; the search resumes
    from its current trail.  It is forward checking with conflict-directed
    backjumping (FC-CBJ): each level records which earlier levels pruned it,
    and a dead end jumps straight back to the latest level responsible.
    Values are tried in canonical element order and levels in insertion
    order, so the solution found is the lexicographically first one, the
    same whether antichains arrive together or one by one.
    """

    def __init__(self, order: FinitePreorder):
        self.order = order
        self._cands: list[tuple[int, ...]] = []
        self._full: list[int] = []
        self._domain: list[int] = []
        self._pruned_in: list[list[tuple[int, int]]] = []  # per level: (by level, mask)
        self._reductions: list[list[tuple[int, int]]] = []  # per level: (target level, mask)
        self._past_fc: list[set[int]] = []
        self._conf: list[set[int]] = []
        self._dead: list[set[int]] = []  # later levels whose failures led here (reporting only)
        self._assign: list[int] = []  # chosen position per assigned level
        self._conflict: tuple[int, ...] | None = None
        self.nodes = 0

    def __len__(self):
        return len(self._cands)

    @property
    def satisfiable(self) -> bool:
        return self._conflict is None

    def _incompatible_positions(self, level: int, element: int) -> int:
        compat = self.order.compat_mask(element)
        mask = 0
        for pos, e in enumerate(self._cands[level]):
            if not compat >> e & 1:
                mask |= 1 << pos
        return mask

    def _prune(self, by: int, target: int, element: int) -> bool:
        """Remove from ``target`` the values incompatible with ``element``
        (the value at level ``by``).  False on wipe-out."""
        removed = self._domain[target] & self._incompatible_positions(target, element)
        if removed:
            self._domain[target] &= ~removed
            self._reductions[by].append((target, removed))
            self._pruned_in[target].append((by, removed))
            self._past_fc[target].add(by)
        return bool(self._domain[target])

    def _undo_reductions(self, level: int) -> None:
        for target, removed in self._reductions[level]:
            self._domain[target] |= removed
            self._pruned_in[target].remove((level, removed))
            if not any(b == level for b, _ in self._pruned_in[target]):
                self._past_fc[target].discard(level)
        self._reductions[level] = []

    def _reset_domain(self, level: int) -> None:
        dom = self._full[level]
        for _, removed in self._pruned_in[level]:
            dom &= ~removed
        self._domain[level] = dom

    def add(self, antichain: Iterable) -> bool:
        """Append an antichain and resume the search.  Returns satisfiability."""
        mask = self.order.mask_of(antichain)
        cands = tuple(bits(mask))
        level = len(self._cands)
        self._cands.append(cands)
        self._full.append((1 << len(cands)) - 1)
        self._domain.append(self._full[-1])
        self._pruned_in.append([])
        self._reductions.append([])
        self._past_fc.append(set())
        self._conf.append(set())
        self._dead.append(set())
        if self._conflict is not None:
            return False
        for j, pos in enumerate(self._assign):
            if not self._prune(j, level, self._cands[j][pos]):
                break
        return self._search()

    def extend(self, antichains: Iterable[Iterable]) -> bool:
        ok = True
        for a in antichains:
            ok = self.add(a)
        return ok

    def _label(self, i: int) -> bool:
        m = len(self._cands)
        while self._domain[i]:
            pos = (self._domain[i] & -self._domain[i]).bit_length() - 1
            self.nodes += 1
            element = self._cands[i][pos]
            self._assign.append(pos)
            wiped = None
            for k in range(i + 1, m):
                if not self._prune(i, k, element):
                    wiped = k
                    break
            if wiped is None:
                return True
            self._conf[i] |= self._past_fc[wiped] - {i}
            self._dead[i].add(wiped)
            self._undo_reductions(i)
            self._assign.pop()
            self._domain[i] &= ~(1 << pos)
        return False

    def _unlabel(self, i: int) -> int:
        culprits = self._conf[i] | self._past_fc[i]
        if not culprits:
            self._conflict = tuple(sorted(self._conf[i] | self._dead[i] | {i}))
            return -1
        h = max(culprits)
        self._conf[h] |= culprits - {h}
        self._dead[h] |= self._dead[i] | {i}
        for j in range(i, h, -1):
            self._conf[j] = set()
            self._dead[j] = set()
            if j < len(self._assign):
                self._undo_reductions(j)
        del self._assign[h + 1:]
        for j in range(i, h, -1):
            self._reset_domain(j)
        pos = self._assign.pop()
        self._undo_reductions(h)
        self._domain[h] &= ~(1 << pos)
        return h

    def _search(self) -> bool:
        i = len(self._assign)
        m = len(self._cands)
        while 0 <= i < m:
            if self._label(i):
                i += 1
            else:
                i = self._unlabel(i)
        return i == m

    def solution(self) -> list[int] | None:
        """Chosen element index per antichain, or None when unsatisfiable."""
        if self._conflict is not None:
            return None
        return [self._cands[i][pos] for i, pos in enumerate(self._assign)]

    @property
    def conflict(self) -> tuple[int, ...] | None:
        return self._conflict


def solve_two_linked_generic(
    order: FinitePreorder,
    family,
    fast_path: bool = True,
    most_constrained_first: bool = False,
) -> LinkedGenericSet:
    """A transversal of ``family`` as a 2-linked generic set.

    Raises Unsatisfiable (with the refuting conflict set of antichain
    indices) when none exists.  When the family is centred the witness
    selection is returned directly.  ``most_constrained_first`` processes
    smaller antichains first; the answer is then valid but may differ from
    the canonical one.
    """
    family = _as_family(order, family)
    if fast_path and len(family) and is_centred(order, family):
        _, selection = centred_witness(order, family)
        members = order.subset(selection)
        return LinkedGenericSet(order, members, tuple(enumerate(selection)))
    levels = list(range(len(family)))
    if most_constrained_first:
        levels.sort(key=lambda i: len(family[i]))
    solver = TransversalSolver(order)
    for i in levels:
        solver.add(family[i])
    picks = solver.solution()
    if picks is None:
        raise Unsatisfiable(tuple(sorted(levels[c] for c in solver.conflict)))
    chosen = dict(zip(levels, picks))
    members = order.subset_from_mask(sum(1 << e for e in set(chosen.values())))
    certs = tuple((i, order.label(chosen[i])) for i in range(len(family)))
    return LinkedGenericSet(order, members, certs)


def exhaustive_two_linked_generic(order: FinitePreorder, family, cap: int = 16):
    """Brute force over every subset: the first 2-linked set meeting every
    antichain (by increasing bitmask), or None."""
    family = _as_family(order, family)
    if len(order) > cap:
        raise CapExceeded(f"exhaustive search is capped at {cap} elements")
    masks = [a.mask for a in family]
    for g in range(1 << len(order)):
        if all(g & a for a in masks) and order.is_two_linked(order.subset_from_mask(g)):
            return order.subset_from_mask(g)
    return None
