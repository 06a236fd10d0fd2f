"""Finite-depth Hahn-Banach extension through dyadic interval conditions.

The sublinear functional is ``p(x) = max_i <c_i, x>`` for finitely many
rational forms ``c_i``; every quantity below is an exact rational.

Pipeline (:func:`hahn_banach_solve`):

1. extend ``f`` from ``W`` to the span of ``W`` and the tracked vectors one
   independent vector at a time, taking the smallest admissible value;
2. for each depth ``n`` populate the antichain of depth-``n`` condition
   functions on the tracked set: the leftmost depth-``n`` subinterval of
   ``I(x) = [-p(-x), p(x)]`` containing the extension's value, plus (under
   ``enumerate_cap``) every other valid condition function of that depth;
3. order the conditions by pointwise interval containment and feed the
   antichains for depths ``0..N`` to the streaming transversal solver;
4. read off one nested interval sequence per tracked vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from ..errors import DepthCap, DimensionMismatch, InfeasibleDomination, NotIndependent
from ..order import order_from_predicate
from ..reduction import AntichainFamily, TransversalSolver
from .dyadic import (
    DEPTH_CAP,
    DyadicInterval,
    interval_scale,
    interval_sum,
    intervals_meet,
    leftmost_containing,
)
from .linear import (
    Vector,
    add,
    coordinates,
    dot,
    in_span,
    independent_subset,
    minimize_max_affine,
    neg,
    rational,
    scale,
    vector,
)


@dataclass(frozen=True)
class SublinearFunctional:
    """``x -> max_i <forms[i], x>``: positively homogeneous and subadditive."""

    forms: tuple[Vector, ...]

    def __post_init__(self):
        forms = tuple(vector(c) for c in self.forms)
        if not forms:
            raise ValueError("need at least one linear form")
        if len({len(c) for c in forms}) != 1:
            raise DimensionMismatch("forms have different lengths")
        object.__setattr__(self, "forms", forms)

    @property
    def dim(self) -> int:
        return len(self.forms[0])

    def __call__(self, x: Sequence) -> Fraction:
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector of length {len(x)} for dimension {self.dim}")
        return max(dot(c, x) for c in self.forms)


@dataclass(frozen=True)
class LinearFunctional:
    """A linear functional given by its values on an independent basis."""

    basis: tuple[Vector, ...]
    values: tuple[Fraction, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(vector(b) for b in self.basis))
        object.__setattr__(self, "values", tuple(rational(v) for v in self.values))
        if len(self.basis) != len(self.values):
            raise ValueError("one value per basis vector")
        if any(len(b) != self.dim for b in self.basis):
            raise DimensionMismatch("basis vector of wrong length")
        if len(independent_subset(self.basis)) != len(self.basis):
            raise ValueError("basis must be independent")

    def defined_at(self, x: Sequence) -> bool:
        return in_span(self.basis, vector(x))

    def __call__(self, x: Sequence) -> Fraction:
        x = vector(x)
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector of length {len(x)} for dimension {self.dim}")
        if not self.basis:
            if any(x):
                raise ValueError("functional is only defined at 0")
            return Fraction(0)
        coeffs = coordinates(self.basis, x)
        if coeffs is None:
            raise ValueError(f"{x} is outside the domain")
        return dot(coeffs, self.values)


def _p(target) -> SublinearFunctional:
    return target.p if isinstance(target, HahnBanachInstance) else target


def minkowski_eval(target, x: Sequence) -> Fraction:
    """``p(x)`` for an instance or a :class:`SublinearFunctional`."""
    return _p(target)(vector(x))


def base_interval(target, x: Sequence) -> tuple[Fraction, Fraction]:
    """``I(x) = [-p(-x), p(x)]``."""
    p = _p(target)
    x = vector(x)
    lo, hi = -p(neg(x)), p(x)
    # subadditivity at 0: p(x) + p(-x) >= p(0) = 0
    assert lo <= hi
    return lo, hi


@dataclass(frozen=True)
class OneStepExtension:
    functional: LinearFunctional
    lower: Fraction
    upper: Fraction
    value: Fraction


def one_step_extension(l: LinearFunctional, z: Sequence, p: SublinearFunctional) -> OneStepExtension:
    """Extend ``l`` to ``span(domain of l, z)`` keeping it below ``p``.

    The admissible values of ``l'(z)`` form ``[lower, upper]`` with
    ``upper = inf_w p(z + w) - l(w)`` and ``lower = sup_w -p(-z - w) - l(w)``
    over ``w`` in the domain of ``l``; both are solved exactly and the
    smallest admissible value is taken.
    """
    z = vector(z)
    if len(z) != l.dim or p.dim != l.dim:
        raise DimensionMismatch("dimensions of l, z and p disagree")
    if l.defined_at(z):
        raise NotIndependent(f"{z} already lies in the domain of l")
    slopes = [[dot(c, b) - v for b, v in zip(l.basis, l.values)] for c in p.forms]
    upper = minimize_max_affine([dot(c, z) for c in p.forms], slopes)
    neg_lower = minimize_max_affine([dot(c, neg(z)) for c in p.forms], slopes)
    if upper is None or neg_lower is None:
        raise InfeasibleDomination("l is not dominated by p on its domain")
    lower = -neg_lower
    if lower > upper:
        raise InfeasibleDomination(f"empty extension range [{lower}, {upper}]")
    extended = LinearFunctional(l.basis + (z,), l.values + (lower,), l.dim)
    return OneStepExtension(extended, lower, upper, lower)


def is_dominated(l: LinearFunctional, p: SublinearFunctional) -> bool:
    """Exact test of ``l <= p`` on the whole domain of ``l``.

    ``inf_w p(w) - l(w)`` is 0 (at ``w = 0``) when dominated and unbounded
    below otherwise.
    """
    if not l.basis:
        return True
    slopes = [[dot(c, b) - v for b, v in zip(l.basis, l.values)] for c in p.forms]
    low = minimize_max_affine([Fraction(0)] * len(p.forms), slopes)
    return low is not None and low >= 0


def extend_to_span(l: LinearFunctional, vectors: Sequence[Sequence], p: SublinearFunctional):
    """Iterate :func:`one_step_extension` over ``vectors`` not yet in the domain.

    Returns the final functional and the list of steps taken.
    """
    steps = []
    for z in vectors:
        if not l.defined_at(z):
            step = one_step_extension(l, z, p)
            steps.append(step)
            l = step.functional
    return l, steps


@dataclass(frozen=True)
class HahnBanachInstance:
    """Data ``(p, W, f, X, N)``; vectors and values are exact rationals.

    ``sums`` holds index triples ``(i, j, k)`` with ``X[i] + X[j] == X[k]`` and
    ``scalings`` triples ``(r, i, j)`` with ``r * X[i] == X[j]``.  Both are
    completed automatically from the tracked vectors; listed ones are
    checked.
    """

    dim: int
    forms: tuple
    subspace_basis: tuple
    f_values: tuple
    tracked: tuple
    depth: int = 0
    sums: tuple = ()
    scalings: tuple = ()

    def __post_init__(self):
        conv = object.__setattr__
        conv(self, "forms", tuple(vector(c) for c in self.forms))
        conv(self, "subspace_basis", tuple(vector(b) for b in self.subspace_basis))
        conv(self, "f_values", tuple(rational(v) for v in self.f_values))
        conv(self, "tracked", tuple(vector(x) for x in self.tracked))
        vectors = self.forms + self.subspace_basis + self.tracked
        if any(len(v) != self.dim for v in vectors):
            raise DimensionMismatch(f"every vector must have length {self.dim}")
        if len(self.f_values) != len(self.subspace_basis):
            raise ValueError("one f value per subspace basis vector")
        if len(set(self.tracked)) != len(self.tracked):
            raise ValueError("tracked vectors must be distinct")
        conv(self, "sums", tuple(self._complete_sums()))
        conv(self, "scalings", tuple(self._complete_scalings()))
        f = self.f  # checks linearity on dependent inputs
        if not is_dominated(f, self.p):
            raise InfeasibleDomination("f is not dominated by p on W")
        for w in self.domination_samples():
            assert f(w) <= self.p(w), w

    @property
    def p(self) -> SublinearFunctional:
        return SublinearFunctional(self.forms)

    @property
    def f(self) -> LinearFunctional:
        keep = independent_subset(self.subspace_basis)
        basis = [self.subspace_basis[i] for i in keep]
        values = [self.f_values[i] for i in keep]
        lf = LinearFunctional(tuple(basis), tuple(values), self.dim)
        for b, v in zip(self.subspace_basis, self.f_values):
            if lf(b) != v:
                raise ValueError(f"f is not linear: f({b}) given as {v}, implied {lf(b)}")
        return lf

    def domination_samples(self) -> list[Vector]:
        basis = list(self.subspace_basis)
        signed = basis + [neg(b) for b in basis]
        out = list(signed)
        for i, u in enumerate(signed):
            for v in signed[i + 1:]:
                out.append(add(u, v))
        return out

    def in_subspace(self, x: Sequence) -> bool:
        return in_span([self.subspace_basis[i] for i in independent_subset(self.subspace_basis)], x)

    def _complete_sums(self):
        found = set()
        for i, j, k in self.sums:
            if add(self.tracked[i], self.tracked[j]) != self.tracked[k]:
                raise ValueError(f"tracked[{i}] + tracked[{j}] != tracked[{k}]")
            found.add((min(i, j), max(i, j), k))
        where = {x: i for i, x in enumerate(self.tracked)}
        for i, x in enumerate(self.tracked):
            for j in range(i, len(self.tracked)):
                k = where.get(add(x, self.tracked[j]))
                if k is not None:
                    found.add((i, j, k))
        return sorted(found)

    def _complete_scalings(self):
        found = set()
        for r, i, j in self.scalings:
            r = rational(r)
            if scale(r, self.tracked[i]) != self.tracked[j]:
                raise ValueError(f"{r} * tracked[{i}] != tracked[{j}]")
            found.add((r, i, j))
        for i, x in enumerate(self.tracked):
            lead = next((t for t, a in enumerate(x) if a != 0), None)
            if lead is None:
                continue
            for j, y in enumerate(self.tracked):
                if i != j:
                    r = y[lead] / x[lead]
                    if scale(r, x) == y:
                        found.add((r, i, j))
        return sorted(found, key=lambda t: (t[1], t[2], t[0]))

    def base_intervals(self) -> list[tuple[Fraction, Fraction]]:
        return [base_interval(self.p, x) for x in self.tracked]


def condition_violations(inst: HahnBanachInstance, g: Sequence[DyadicInterval]) -> list[str]:
    """Which of the four condition clauses ``g`` (one interval per tracked
    vector) breaks; empty means ``g`` is a condition."""
    problems = []
    f = inst.f
    for x, (lo, hi), gx in zip(inst.tracked, inst.base_intervals(), g):
        if (gx.a, gx.b) != (lo, hi):
            problems.append(f"(1) interval for {x} is not a dyadic subinterval of I(x)")
        if inst.in_subspace(x) and f(x) not in gx:
            problems.append(f"(2) f({x}) = {f(x)} not in {gx}")
    for i, j, k in inst.sums:
        if not intervals_meet(interval_sum(g[i].bounds, g[j].bounds), g[k].bounds):
            problems.append(f"(3) g(x{i}) + g(x{j}) misses g(x{k})")
    for r, i, j in inst.scalings:
        if not intervals_meet(interval_scale(r, g[i].bounds), g[j].bounds):
            problems.append(f"(4) {r} g(x{i}) misses g(x{j})")
    return problems


def claim_condition(inst: HahnBanachInstance, extension: LinearFunctional, depth: int):
    """Leftmost depth-``depth`` interval of ``I(x)`` containing ``extension(x)``, per x."""
    return tuple(
        leftmost_containing(lo, hi, depth, extension(x))
        for x, (lo, hi) in zip(inst.tracked, inst.base_intervals())
    )


def _all_conditions(inst: HahnBanachInstance, depth: int):
    choices = []
    for lo, hi in inst.base_intervals():
        count = 1 if lo == hi else 2**depth
        choices.append([DyadicInterval(lo, hi, depth, k) for k in range(count)])
    for g in product(*choices):
        if not condition_violations(inst, g):
            yield g


@dataclass(frozen=True)
class FunctionalEnclosure:
    """Per tracked vector, the depth-N interval enclosing the extracted value,
    plus the whole nested sequence for depths 0..N."""

    instance: HahnBanachInstance
    depth: int
    intervals: tuple[DyadicInterval, ...]
    levels: tuple[tuple[DyadicInterval, ...], ...]
    extension: LinearFunctional
    solver_nodes: int = field(default=0, compare=False)

    def interval_for(self, x: Sequence) -> DyadicInterval:
        return self.intervals[self.instance.tracked.index(vector(x))]

    def widths(self) -> tuple[Fraction, ...]:
        return tuple(g.width for g in self.intervals)

    def check(self) -> None:
        inst = self.instance
        assert not condition_violations(inst, self.intervals)
        for x, g in zip(inst.tracked, self.intervals):
            p = inst.p
            assert g.width == (p(x) + p(neg(x))) / 2**self.depth
        for shallow, deep in zip(self.levels, self.levels[1:]):
            assert all(d.issubset(s) for s, d in zip(shallow, deep))


def hahn_banach_solve(
    inst: HahnBanachInstance,
    depth: int | None = None,
    enumerate_cap: int = 0,
    depth_cap: int = DEPTH_CAP,
) -> FunctionalEnclosure:
    """Run the dyadic-condition pipeline to depth ``depth`` (default ``inst.depth``).

    ``enumerate_cap`` > 0 adds every valid condition of a depth to its
    antichain whenever that depth has at most ``enumerate_cap`` candidate
    functions, which makes the solver actually search.
    """
    depth = inst.depth if depth is None else depth
    if depth > depth_cap:
        raise DepthCap(f"depth {depth} exceeds cap {depth_cap}")
    extension, _ = extend_to_span(inst.f, inst.tracked, inst.p)
    assert is_dominated(extension, inst.p)

    per_depth: list[list[tuple[DyadicInterval, ...]]] = []
    for n in range(depth + 1):
        claim = claim_condition(inst, extension, n)
        assert not condition_violations(inst, claim), condition_violations(inst, claim)
        level = [claim]
        if enumerate_cap and 2 ** (n * len(inst.tracked)) <= enumerate_cap:
            level = sorted(set(_all_conditions(inst, n)) | {claim}, key=lambda g: [x.k for x in g])
        per_depth.append(level)

    labels = [(n, tuple(x.k for x in g)) for n, level in enumerate(per_depth) for g in level]
    lookup = {(n, tuple(x.k for x in g)): g for n, level in enumerate(per_depth) for g in level}
    order = order_from_predicate(
        labels,
        lambda u, v: u[0] >= v[0] and all(a.issubset(b) for a, b in zip(lookup[u], lookup[v])),
        kind="poset",
        max_size=None,
    )
    family = AntichainFamily(
        order, tuple(order.subset((n, tuple(x.k for x in g)) for g in level) for n, level in enumerate(per_depth))
    )
    solver = TransversalSolver(order)
    for antichain in family:
        ok = solver.add(antichain)
        assert ok, "the extension's own conditions always form a solution"
    chosen = [lookup[order.label(e)] for e in solver.solution()]
    result = FunctionalEnclosure(
        inst, depth, chosen[-1], tuple(chosen), extension, solver_nodes=solver.nodes
    )
    result.check()
    return result
