import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weakchoice.applications.linear import (
    coordinates,
    in_span,
    independent_subset,
    minimize_max_affine,
    rational,
    vector,
)

scipy_optimize = pytest.importorskip("scipy.optimize")


def test_rational_parsing():
    assert rational("2/4") == Fraction(1, 2)
    assert rational(3) == 3
    with pytest.raises(TypeError):
        rational(0.5)
    with pytest.raises(TypeError):
        rational(True)


def test_coordinates():
    basis = [vector((1, 1)), vector((1, -1))]
    assert coordinates(basis, vector((2, 0))) == (1, 1)
    assert coordinates([vector((1, 1))], vector((1, 0))) is None
    with pytest.raises(ValueError):
        coordinates([vector((1, 1)), vector((2, 2))], vector((3, 3)))


def test_span_helpers():
    assert in_span([], vector((0, 0)))
    assert not in_span([], vector((0, 1)))
    assert independent_subset([vector(v) for v in [(1, 1), (2, 2), (0, 1), (1, 0)]]) == [0, 2]


def test_minimize_examples():
    # |t| = max(t, -t) has minimum 0
    assert minimize_max_affine([0, 0], [[1], [-1]]) == 0
    # max(1 + t, 1 - t) has minimum 1
    assert minimize_max_affine([1, 1], [[1], [-1]]) == 1
    # a single non-constant piece is unbounded below
    assert minimize_max_affine([0], [[1]]) is None
    # no variables: plain max
    assert minimize_max_affine([3, 5], [[], []]) == 5


def _lp_value(offsets, slopes):
    """min s subject to s >= offsets[i] + slopes[i] . t, by HiGHS."""
    k = len(slopes[0])
    c = [1.0] + [0.0] * k
    a_ub = [[-1.0] + [float(x) for x in slope] for slope in slopes]
    b_ub = [-float(o) for o in offsets]
    res = scipy_optimize.linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=[(None, None)] * (k + 1), method="highs")
    if res.status == 3:
        return None
    assert res.status == 0
    return res.fun


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 3),
    st.integers(1, 6),
    st.integers(0, 2**32 - 1),
)
def test_minimize_matches_lp_solver(k, m, seed):
    rng = random.Random(seed)
    offsets = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(m)]
    slopes = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(m)]
    exact = minimize_max_affine(offsets, slopes)
    approx = _lp_value(offsets, slopes)
    if exact is None:
        assert approx is None
    else:
        assert approx is not None
        assert abs(float(exact) - approx) < 1e-7
