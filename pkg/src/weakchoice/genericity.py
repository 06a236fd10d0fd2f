"""Filters meeting dense sets, and the maximum-antichain filter construction.

Two facts about finite orders are used throughout:

* a filter meets every dense set iff it meets every maximal antichain
  (upward closure carries a hit on the down-closure of an antichain up to
  the antichain itself), so :func:`fully_generic_filters` only needs the
  maximal antichains;
* a nonempty filter of a finite order is the up-set of any of its least
  elements, so candidate filters are the principal up-sets plus the empty set.

The ``naive`` switches ignore both facts and scan every subset; they exist
to cross-validate the fast paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, NotDense, NotSemiSeparative
from .order import ElementSubset, FinitePreorder, bits, subset_key

EXHAUSTIVE_CAP = 20
NAIVE_CAP = 10


@dataclass(frozen=True)
class DenseFamily:
    """An ordered, optionally named list of dense subsets of ``order``."""

    order: FinitePreorder
    members: tuple[ElementSubset, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        members = tuple(
            m if isinstance(m, ElementSubset) else self.order.subset(m) for m in self.members
        )
        object.__setattr__(self, "members", members)
        if self.names and len(self.names) != len(members):
            raise ValueError("names and members differ in length")
        for i, m in enumerate(members):
            if not self.order.is_dense(m):
                raise NotDense(f"member {i} ({list(m.labels)}) is not dense")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class GenericFilter:
    """A filter together with one witness per dense set it was built to meet."""

    order: FinitePreorder
    members: ElementSubset
    certificates: tuple[tuple[int, object], ...] = field(default=())

    def validate(self, family: DenseFamily | Sequence) -> None:
        assert self.order.is_filter(self.members), "not a filter"
        dense = list(family)
        assert len(self.certificates) == len(dense)
        for (i, witness), d in zip(self.certificates, dense):
            assert witness in self.members and witness in self.order.subset(d), (i, witness)


def principal_upset(order: FinitePreorder, p) -> ElementSubset:
    """``{q : p <= q}``."""
    return order.subset_from_mask(order.up_mask(order.index(p)))


def compatibility_class(order: FinitePreorder, p) -> ElementSubset:
    """``{q : q compatible with p}``."""
    return order.subset_from_mask(order.compat_mask(order.index(p)))


def directedness_dense_set(order: FinitePreorder, q, r) -> ElementSubset:
    """The dense set of conditions that are incompatible with ``q`` or with
    ``r``, or that extend both."""
    iq, ir = order.index(q), order.index(r)
    below_both = order.down_mask(iq) & order.down_mask(ir)
    incompatible = order.full_mask & ~(order.compat_mask(iq) & order.compat_mask(ir))
    result = order.subset_from_mask(below_both | incompatible)
    assert order.is_dense(result)
    return result


def maximal_antichains(order: FinitePreorder) -> list[ElementSubset]:
    """All maximal antichains, in canonical subset order.

    Bron-Kerbosch with pivoting on the incompatibility graph: antichains are
    its cliques.
    """
    n = len(order)
    incompat = [order.full_mask & ~order.compat_mask(i) for i in range(n)]
    found: list[int] = []

    def expand(clique: int, cand: int, excluded: int) -> None:
        if not cand and not excluded:
            found.append(clique)
            return
        pivot = max(bits(cand | excluded), key=lambda u: bin(cand & incompat[u]).count("1"))
        for v in bits(cand & ~incompat[pivot]):
            expand(clique | 1 << v, cand & incompat[v], excluded & incompat[v])
            cand &= ~(1 << v)
            excluded |= 1 << v

    # the empty order has one maximal antichain, the empty one
    expand(0, order.full_mask, 0)
    found.sort(key=subset_key)
    return [order.subset_from_mask(m) for m in found]


def dense_subsets(order: FinitePreorder) -> Iterator[ElementSubset]:
    """Every dense subset, by brute force over all subsets."""
    if len(order) > NAIVE_CAP:
        raise CapExceeded(f"naive enumeration is capped at {NAIVE_CAP} elements")
    for mask in range(1 << len(order)):
        if all(order.down_mask(i) & mask for i in range(len(order))):
            yield order.subset_from_mask(mask)


def _filter_candidates(order: FinitePreorder, naive: bool) -> list[int]:
    if naive:
        return [m for m in range(1 << len(order)) if order.is_filter(order.subset_from_mask(m))]
    masks = {0}
    masks.update(order.up_mask(i) for i in range(len(order)))
    return sorted(masks)


def fully_generic_filters(
    order: FinitePreorder, naive: bool = False, cap: int = EXHAUSTIVE_CAP
) -> list[ElementSubset]:
    """Every filter meeting every dense subset, in canonical subset order."""
    if len(order) > (min(cap, NAIVE_CAP) if naive else cap):
        raise CapExceeded(f"{len(order)} elements exceeds the exhaustive cap")
    if naive:
        targets = [d.mask for d in dense_subsets(order)]
    else:
        targets = [a.mask for a in maximal_antichains(order)]
    hits = [g for g in _filter_candidates(order, naive) if all(g & t for t in targets)]
    hits.sort(key=subset_key)
    return [order.subset_from_mask(g) for g in hits]


def check_lemma_2_2(order: FinitePreorder, naive: bool = False, cap: int = EXHAUSTIVE_CAP) -> bool:
    """Fully generic filters coincide with the up-sets of minimal elements.

    Only meaningful (and only accepted) for semi-separative orders.
    """
    if not order.is_semi_separative():
        raise NotSemiSeparative("order is not semi-separative")
    generic = {g.mask for g in fully_generic_filters(order, naive=naive, cap=cap)}
    upsets = {order.up_mask(i) for i in bits(order.minimal_elements().mask)}
    return generic == upsets


def find_generic_filter(order: FinitePreorder, family: DenseFamily | Iterable) -> GenericFilter:
    """Decreasing-chain construction of a filter meeting each listed dense set.

    Starting from no condition, take the canonically first element of the
    next dense set that extends the current condition.  Finally descend to
    the canonically first minimal element below the last condition, so the
    result is also fully generic.  The filter is the up-set of the chain.
    """
    if not isinstance(family, DenseFamily):
        family = DenseFamily(order, tuple(family))
    current = None
    certificates = []
    for i, dense in enumerate(family.members):
        allowed = dense.mask if current is None else dense.mask & order.down_mask(current)
        # never empty: density gives an extension of the current condition
        current = next(bits(allowed))
        certificates.append((i, order.label(current)))
    below = order.full_mask if current is None else order.down_mask(current)
    minimal = below & order.minimal_elements().mask
    if minimal:
        current = next(bits(minimal))
    members = order.subset_from_mask(order.up_mask(current)) if current is not None else order.subset()
    return GenericFilter(order, members, tuple(certificates))


def max_antichain(order: FinitePreorder) -> ElementSubset:
    """An antichain of maximum size; ties go to the canonically first subset.

    Depth-first branch and bound over index-increasing extensions, which
    visits antichains in canonical order, so the first maximum found wins.
    """
    n = len(order)
    incompat = [order.full_mask & ~order.compat_mask(i) for i in range(n)]
    best = [0, 0]  # size, mask

    def search(chosen: int, size: int, cand: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, chosen
        if size + bin(cand).count("1") <= best[0]:
            return
        for v in bits(cand):
            # later candidates only: keep index order increasing
            rest = cand & incompat[v] & ~((2 << v) - 1)
            search(chosen | 1 << v, size + 1, rest)
            if size + bin(cand >> (v + 1)).count("1") <= best[0]:
                return

    search(0, 0, order.full_mask)
    return order.subset_from_mask(best[1])


def linearly_orderable_generic_filter(order: FinitePreorder) -> ElementSubset:
    """Compatibility class of the first element of a maximum antichain.

    In an order with bounded antichains this set is a filter meeting every
    dense set; it inherits the canonical index order as a linear order.
    """
    top = max_antichain(order)
    if not len(top):
        return order.subset()
    return compatibility_class(order, top.labels[0])


def selector_via_trivial_preorder(blocks: Sequence[Sequence]) -> list:
    """Pick one element per block through a generic filter on the trivial preorder.

    Every block is dense in the preorder where everything lies below
    everything; the filter found meets each block, and the canonical index
    order supplies the minimum of each intersection.
    """
    from .order import build_order

    flat = [x for block in blocks for x in block]
    order = build_order(flat, [(x, y) for x in flat for y in flat], kind="preorder", max_size=None)
    g = find_generic_filter(order, [block for block in blocks])
    return [(order.subset(block) & g.members).labels[0] for block in blocks]
