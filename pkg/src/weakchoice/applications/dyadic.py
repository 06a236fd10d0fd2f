"""Dyadic subintervals of a closed rational interval.

The depth-``n`` subintervals of ``[a, b]`` are the ``2**n`` equal closed
pieces ``[a + (b-a)k/2**n, a + (b-a)(k+1)/2**n]``.  Two dyadic subintervals
of the same base either share at most a point or are nested.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DepthCap

DEPTH_CAP = 32


@dataclass(frozen=True, order=True)
class DyadicInterval:
    a: Fraction
    b: Fraction
    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.a > self.b:
            raise ValueError("base interval must have a <= b")
        if self.n < 0 or not 0 <= self.k < 2**self.n:
            raise ValueError(f"index {self.k} out of range at depth {self.n}")

    @property
    def lo(self) -> Fraction:
        return self.a + (self.b - self.a) * self.k / 2**self.n

    @property
    def hi(self) -> Fraction:
        return self.a + (self.b - self.a) * (self.k + 1) / 2**self.n

    @property
    def width(self) -> Fraction:
        return (self.b - self.a) / 2**self.n

    @property
    def bounds(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def issubset(self, other: "DyadicInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def parent(self, depth: int) -> "DyadicInterval":
        """The unique ancestor at a shallower ``depth`` (same base)."""
        if not 0 <= depth <= self.n:
            raise ValueError("parent depth must not exceed own depth")
        return DyadicInterval(self.a, self.b, depth, self.k >> (self.n - depth))

    def children(self) -> tuple["DyadicInterval", "DyadicInterval"]:
        return (
            DyadicInterval(self.a, self.b, self.n + 1, 2 * self.k),
            DyadicInterval(self.a, self.b, self.n + 1, 2 * self.k + 1),
        )

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def dyadic_subintervals(a, b, n: int, depth_cap: int = DEPTH_CAP) -> list[DyadicInterval]:
    """All depth-``n`` subintervals of ``[a, b]`` in increasing ``k``."""
    if n > depth_cap:
        raise DepthCap(f"depth {n} exceeds cap {depth_cap}")
    return [DyadicInterval(a, b, n, k) for k in range(2**n)]


def leftmost_containing(a, b, n: int, value, depth_cap: int = DEPTH_CAP) -> DyadicInterval:
    """The leftmost depth-``n`` subinterval of ``[a, b]`` containing ``value``."""
    if n > depth_cap:
        raise DepthCap(f"depth {n} exceeds cap {depth_cap}")
    a, b, value = Fraction(a), Fraction(b), Fraction(value)
    if not a <= value <= b:
        raise ValueError(f"{value} lies outside [{a}, {b}]")
    if a == b:
        return DyadicInterval(a, b, n, 0)
    # value in (lo_k, hi_k] picks k; the left endpoint itself picks k = 0
    k = max(math.ceil((value - a) * 2**n / (b - a)) - 1, 0)
    return DyadicInterval(a, b, n, k)


def interval_sum(x: tuple[Fraction, Fraction], y: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    return x[0] + y[0], x[1] + y[1]


def interval_scale(r: Fraction, x: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    lo, hi = r * x[0], r * x[1]
    return (lo, hi) if lo <= hi else (hi, lo)


def intervals_meet(x: tuple[Fraction, Fraction], y: tuple[Fraction, Fraction]) -> bool:
    return max(x[0], y[0]) <= min(x[1], y[1])
