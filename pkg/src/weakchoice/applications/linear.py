"""Exact rational linear algebra and a Fourier-Motzkin minimiser.

Everything here works on tuples of :class:`fractions.Fraction`; nothing is
ever converted to float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def rational(value) -> Fraction:
    """Parse an int, Fraction, or ``"p/q"`` string.  Floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {value!r}")
    return Fraction(value)


def vector(values: Iterable) -> Vector:
    return tuple(rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale(t: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(t * a for a in v)


def neg(v: Sequence[Fraction]) -> Vector:
    return tuple(-a for a in v)


def combination(coeffs: Sequence[Fraction], basis: Sequence[Vector], dim: int) -> Vector:
    out = [Fraction(0)] * dim
    for c, b in zip(coeffs, basis):
        for i, x in enumerate(b):
            out[i] += c * x
    return tuple(out)


def coordinates(basis: Sequence[Vector], v: Sequence[Fraction]) -> Vector | None:
    """Coefficients expressing ``v`` in the (independent) ``basis``, or None
    when ``v`` is outside the span.  Gauss-Jordan on the augmented system."""
    k = len(basis)
    dim = len(v)
    rows = [[basis[j][i] for j in range(k)] + [Fraction(v[i])] for i in range(dim)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, dim)):
        return None
    if len(pivots) != k:
        raise ValueError("basis is linearly dependent")
    coeffs = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        coeffs[c] = rows[i][k]
    return tuple(coeffs)


def in_span(basis: Sequence[Vector], v: Sequence[Fraction]) -> bool:
    if not basis:
        return all(x == 0 for x in v)
    return coordinates(basis, v) is not None


def independent_subset(vectors: Sequence[Vector]) -> list[int]:
    """Indices of a maximal independent subfamily, greedily in input order."""
    chosen: list[int] = []
    for i, v in enumerate(vectors):
        if not in_span([vectors[j] for j in chosen], v):
            chosen.append(i)
    return chosen


def minimize_max_affine(offsets: Sequence[Fraction], slopes: Sequence[Sequence[Fraction]]) -> Fraction | None:
    """Exact ``min over t of max_i (offsets[i] + slopes[i] . t)``.

    Returns None when the minimum is unbounded below.  Written as the LP
    ``min s  s.t.  s - slopes[i] . t >= offsets[i]`` and solved by eliminating
    every ``t`` coordinate with Fourier-Motzkin; what remains are lower
    bounds on ``s`` alone.
    """
    if not offsets:
        raise ValueError("need at least one affine piece")
    k = len(slopes[0]) if slopes else 0
    # each constraint: (coefficients of t_0..t_{k-1}, coefficient of s, rhs), meaning lhs >= rhs
    constraints = [
        ([-Fraction(c) for c in slope], Fraction(1), Fraction(off)) for off, slope in zip(offsets, slopes)
    ]
    for var in range(k):
        pos = [c for c in constraints if c[0][var] > 0]
        negs = [c for c in constraints if c[0][var] < 0]
        zero = [c for c in constraints if c[0][var] == 0]
        combined = []
        for a in pos:
            for b in negs:
                wa, wb = -b[0][var], a[0][var]
                coeffs = [wa * x + wb * y for x, y in zip(a[0], b[0])]
                combined.append((coeffs, wa * a[1] + wb * b[1], wa * a[2] + wb * b[2]))
        constraints = _dedupe(zero + combined)
    bounds = [rhs / s for _, s, rhs in constraints if s > 0]
    if not bounds:
        return None
    return max(bounds)


def _dedupe(constraints):
    # same direction per unit of s: only the largest right-hand side matters
    best = {}
    for coeffs, s, rhs in constraints:
        key = tuple(c / s for c in coeffs)
        if key not in best or rhs / s > best[key]:
            best[key] = rhs / s
    return [(list(key), Fraction(1), rhs) for key, rhs in best.items()]
