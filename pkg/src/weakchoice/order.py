"""Finite partial orders and preorders.

Elements are addressed by label; internally every element has the index of
its label in the input order, and that index order is the canonical order
used by every enumeration and greedy choice in the package.  The relation is
stored as two tuples of int bitsets: ``_up[i]`` holds ``{j : i <= j}`` and
``_down[i]`` holds ``{j : j <= i}``.

``p <= q`` is read "p extends q".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .errors import AntisymmetryViolation, CapExceeded, DuplicateLabel, NotDense, UnknownLabel

DEFAULT_MAX_SIZE = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subset_key(mask: int) -> tuple[int, ...]:
    """Canonical subset order: lexicographic on the sorted index tuple."""
    return tuple(bits(mask))


class FinitePreorder:
    """A reflexive, transitive relation on a finite list of labels."""

    kind = "preorder"

    def __init__(self, labels: Sequence[Hashable], up_rows: Sequence[int]):
        # Trusted constructor: rows must already be reflexive and transitive.
        # Use build_order / order_from_predicate for validated construction.
        self._labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise DuplicateLabel("labels must be distinct")
        self._up = tuple(up_rows)
        down = [0] * len(self._labels)
        for i, row in enumerate(self._up):
            for j in bits(row):
                down[j] |= 1 << i
        self._down = tuple(down)

    # -- basic access -----------------------------------------------------

    @property
    def labels(self) -> tuple:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __eq__(self, other):
        if not isinstance(other, FinitePreorder):
            return NotImplemented
        return (self.kind, self._labels, self._up) == (other.kind, other._labels, other._up)

    def __hash__(self):
        return hash((self.kind, self._labels, self._up))

    def __repr__(self):
        return f"{type(self).__name__}({list(self._labels)!r}, {len(self.pairs())} strict pairs)"

    def index(self, label) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise UnknownLabel(f"unknown element {label!r}") from None

    def label(self, i: int):
        return self._labels[i]

    @property
    def full_mask(self) -> int:
        return (1 << len(self._labels)) - 1

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def down_mask(self, i: int) -> int:
        return self._down[i]

    @cached_property
    def _compat(self) -> tuple[int, ...]:
        # q is compatible with i iff q lies above something below i
        rows = []
        for i in range(len(self._labels)):
            row = 0
            for k in bits(self._down[i]):
                row |= self._up[k]
            rows.append(row)
        return tuple(rows)

    def compat_mask(self, i: int) -> int:
        """Bitset of elements compatible with element ``i``."""
        return self._compat[i]

    def mask_of(self, subset) -> int:
        """Bitset for an :class:`ElementSubset` or an iterable of labels."""
        if isinstance(subset, ElementSubset):
            if subset.order is not self and subset.order != self:
                raise ValueError("subset belongs to a different order")
            return subset.mask
        mask = 0
        for lab in subset:
            mask |= 1 << self.index(lab)
        return mask

    def subset(self, labels: Iterable = ()) -> "ElementSubset":
        return ElementSubset(self, self.mask_of(labels))

    def subset_from_mask(self, mask: int) -> "ElementSubset":
        return ElementSubset(self, mask)

    def pairs(self) -> list[tuple]:
        """Non-reflexive related pairs ``(x, y)`` with ``x <= y``, in index order."""
        return [
            (self._labels[i], self._labels[j])
            for i in range(len(self._labels))
            for j in bits(self._up[i])
            if j != i
        ]

    # -- Basic vocabulary --------------------------------------------------

    def leq(self, p, q) -> bool:
        return bool(self._up[self.index(p)] >> self.index(q) & 1)

    def compatible(self, p, q) -> bool:
        """True iff ``p`` and ``q`` have a common extension."""
        return bool(self._down[self.index(p)] & self._down[self.index(q)])

    def is_antichain(self, subset) -> bool:
        mask = self.mask_of(subset)
        for i in bits(mask):
            if self._compat[i] & mask & ~(1 << i):
                return False
        return True

    def is_dense(self, subset) -> bool:
        mask = self.mask_of(subset)
        return all(self._down[i] & mask for i in range(len(self._labels)))

    def is_filter(self, subset) -> bool:
        """Upward closed, and any two members have a common extension inside.

        The empty set qualifies.
        """
        mask = self.mask_of(subset)
        members = list(bits(mask))
        for i in members:
            if self._up[i] & ~mask:
                return False
        for x, i in enumerate(members):
            for j in members[x + 1:]:
                if not self._down[i] & self._down[j] & mask:
                    return False
        return True

    def is_two_linked(self, subset) -> bool:
        mask = self.mask_of(subset)
        return all(mask & ~self._compat[i] == 0 for i in bits(mask))

    def _minimal_mask(self) -> int:
        # no strictly smaller element: everything below i is also above i
        mask = 0
        for i in range(len(self._labels)):
            if self._down[i] & ~self._up[i] == 0:
                mask |= 1 << i
        return mask

    def minimal_elements(self) -> "ElementSubset":
        return ElementSubset(self, self._minimal_mask())

    def is_semi_separative(self) -> bool:
        """Every element is minimal or has two incompatible extensions."""
        minimal = self._minimal_mask()
        for i in range(len(self._labels)):
            if minimal >> i & 1:
                continue
            below = self._down[i]
            if not any(below & ~self._compat[j] for j in bits(below)):
                return False
        return True

    def dense_to_maximal_antichain(self, dense) -> "ElementSubset":
        """Greedy maximal antichain inside a dense set, canonical order."""
        mask = self.mask_of(dense)
        if not self.is_dense(ElementSubset(self, mask)):
            raise NotDense("argument is not dense")
        chosen = 0
        for i in bits(mask):
            if not self._compat[i] & chosen:
                chosen |= 1 << i
        return ElementSubset(self, chosen)


class FinitePoset(FinitePreorder):
    """A finite preorder that is also antisymmetric."""

    kind = "poset"

    def __init__(self, labels, up_rows):
        super().__init__(labels, up_rows)
        for i, row in enumerate(self._up):
            if row & self._down[i] & ~(1 << i):
                j = next(b for b in bits(row & self._down[i]) if b != i)
                raise AntisymmetryViolation(
                    f"{self._labels[i]!r} and {self._labels[j]!r} are mutually related"
                )

    def _minimal_mask(self) -> int:
        mask = 0
        for i in range(len(self._labels)):
            if self._down[i] == 1 << i:
                mask |= 1 << i
        return mask


@dataclass(frozen=True)
class ElementSubset:
    """A subset of an order's elements, held as a bitset over indices."""

    order: FinitePreorder
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.order):
            raise ValueError("subset index out of range")

    @property
    def indices(self) -> tuple[int, ...]:
        return subset_key(self.mask)

    @property
    def labels(self) -> tuple:
        return tuple(self.order.label(i) for i in bits(self.mask))

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return bin(self.mask).count("1")

    def __contains__(self, label):
        return label in self.order and bool(self.mask >> self.order.index(label) & 1)

    def __eq__(self, other):
        if isinstance(other, ElementSubset):
            return self.mask == other.mask and (self.order is other.order or self.order == other.order)
        if isinstance(other, (set, frozenset)):
            return set(self.labels) == other
        return NotImplemented

    def __hash__(self):
        return hash((len(self.order), self.mask))

    def __repr__(self):
        return "{" + ", ".join(map(repr, self.labels)) + "}"

    def __or__(self, other):
        return ElementSubset(self.order, self.mask | self.order.mask_of(other))

    def __and__(self, other):
        return ElementSubset(self.order, self.mask & self.order.mask_of(other))


def _close(n: int, up: list[int]) -> list[int]:
    for i in range(n):
        up[i] |= 1 << i
    for k in range(n):
        bit = 1 << k
        row_k = up[k]
        for i in range(n):
            if up[i] & bit:
                up[i] |= row_k
    return up


def _check_size(n: int, max_size: int | None):
    if max_size is not None and n > max_size:
        raise CapExceeded(f"{n} elements exceeds the cap of {max_size}")


def build_order(
    labels: Sequence[Hashable],
    pairs: Iterable[tuple] = (),
    kind: str = "poset",
    max_size: int | None = DEFAULT_MAX_SIZE,
) -> FinitePreorder:
    """Reflexive-transitive closure of ``pairs`` (``(x, y)`` meaning x <= y).

    Element order follows ``labels``.  Raises DuplicateLabel, UnknownLabel,
    and for ``kind="poset"`` AntisymmetryViolation when the closure relates
    two distinct elements both ways.
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        seen = set()
        dup = next(lab for lab in labels if lab in seen or seen.add(lab))
        raise DuplicateLabel(f"duplicate label {dup!r}")
    _check_size(len(labels), max_size)
    index = {lab: i for i, lab in enumerate(labels)}
    up = [0] * len(labels)
    for x, y in pairs:
        if x not in index:
            raise UnknownLabel(f"unknown element {x!r}")
        if y not in index:
            raise UnknownLabel(f"unknown element {y!r}")
        up[index[x]] |= 1 << index[y]
    up = _close(len(labels), up)
    if kind == "poset":
        return FinitePoset(labels, up)
    if kind == "preorder":
        return FinitePreorder(labels, up)
    raise ValueError(f"unknown order kind {kind!r}")


def order_from_predicate(
    labels: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
    kind: str = "poset",
    max_size: int | None = DEFAULT_MAX_SIZE,
) -> FinitePreorder:
    """Build an order from a pairwise predicate ``leq(x, y)`` (closure is still taken)."""
    labels = tuple(labels)
    _check_size(len(labels), max_size)
    pairs = [
        (x, y)
        for i, x in enumerate(labels)
        for j, y in enumerate(labels)
        if i != j and leq(x, y)
    ]
    return build_order(labels, pairs, kind=kind, max_size=None)
