"""Acceptance suite.

Each test checks one acceptance criterion at its stated tolerance and time
budget.  A PASS/FAIL line per criterion is printed at the end of the run
(see conftest.py).  Run on its own with::

    python3 -m pytest tests/test_acceptance.py -v
"""

import itertools
import json
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from weakchoice import oracles
from weakchoice.applications.choice import SConsistentInstance, s_consistent_choice
from weakchoice.applications.dyadic import interval_sum, intervals_meet
from weakchoice.applications.hahn_banach import HahnBanachInstance, hahn_banach_solve
from weakchoice.applications.ordering import is_linear_order, ordering_poset, ordering_principle
from weakchoice.errors import CoverageGap, EmptyMember, Unsatisfiable
from weakchoice.genericity import check_lemma_2_2
from weakchoice.mess import CNF, PartialBinaryFunction as F, mess_from_cnf
from weakchoice.reduction import (
    AntichainFamily,
    consistent_from_two_linked,
    exhaustive_two_linked_generic,
    is_centred,
    mess_from_poset,
    poset_from_mess,
    restriction_set,
    solve_two_linked_generic,
)

from helpers import (
    all_posets,
    pairwise_order,
    random_centred_family,
    random_family,
    random_mess,
    random_poset,
)

DATA = Path(__file__).parent / "data"


def _family(order, labels):
    return AntichainFamily(order, tuple(order.subset(a) for a in labels))


@pytest.mark.criterion(1, "generic filters on semi-separative posets are fully generic")
def test_semi_separative_filters():
    start = time.perf_counter()
    exhaustive = 0
    for n in range(5):
        for order in all_posets(n):
            if order.is_semi_separative():
                exhaustive += 1
                assert check_lemma_2_2(order), order.pairs()
    rng = random.Random(2024)
    sampled = 0
    while sampled < 1000:
        order = random_poset(rng, rng.randint(5, 6), rng.random())
        if not order.is_semi_separative():
            continue
        sampled += 1
        assert check_lemma_2_2(order), order.pairs()
    elapsed = time.perf_counter() - start
    assert exhaustive > 0
    assert elapsed < 30, elapsed


@pytest.mark.criterion(2, "2-linked generic sets are exactly the consistent characteristic functions")
def test_forward_correspondence():
    start = time.perf_counter()
    rng = random.Random(2025)
    for _ in range(200):
        n = rng.randint(1, 8)
        order = random_poset(rng, n, rng.random())
        labels = random_centred_family(rng, order, rng.randint(0, 4))
        assert is_centred(order, labels)
        mess = mess_from_poset(order, labels)
        masks = [order.mask_of(a) for a in labels]
        for g in range(1 << n):
            lhs = oracles.two_linked(order, g) and all(g & a for a in masks)
            chi = F({order.label(i): g >> i & 1 for i in range(n)})
            assert lhs == mess.is_consistent(chi, exhaustive=True), (order.pairs(), labels, g)
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(3, "messes round-trip through their poset of restrictions")
def test_backward_round_trip():
    rng = random.Random(2026)
    for _ in range(200):
        ground = "wxyz"[: rng.randint(0, 4)]
        mess = random_mess(rng, ground)
        assert mess.is_extensional
        order, family = poset_from_mess(mess)
        for a, dom in zip(family, family.names):
            assert len(a) <= 2 ** len(dom)
        assert is_centred(order, family)
        for f in mess.consistent_functions():
            assert consistent_from_two_linked(mess, restriction_set(order, f)) == f
        g = solve_two_linked_generic(order, family)
        for a in family:
            assert bin(g.members.mask & a.mask).count("1") == 1


@pytest.mark.criterion(4, "transversal solver agrees with exhaustive search")
def test_solver_against_exhaustive():
    rng = random.Random(2027)
    sat = unsat = 0
    for i in range(500):
        order = random_poset(rng, rng.randint(1, 10), rng.random())
        k = rng.randint(0, 5)
        labels = random_centred_family(rng, order, k) if i % 4 == 0 else random_family(rng, order, k)
        family = _family(order, labels)
        brute = exhaustive_two_linked_generic(order, family)
        for fast in (True, False):
            try:
                g = solve_two_linked_generic(order, family, fast_path=fast)
            except Unsatisfiable:
                assert brute is None, (order.pairs(), labels)
                unsat += 1
                continue
            assert brute is not None, (order.pairs(), labels)
            g.validate(family)
            assert oracles.two_linked(order, g.members.mask)
            sat += 1
    assert sat and unsat
    # every pair is jointly extendable, the triple is not
    order = pairwise_order()
    labels = [["a"], ["b"], ["c"]]
    assert not is_centred(order, labels)
    g = solve_two_linked_generic(order, labels)
    g.validate(_family(order, labels))
    assert len(order) == 6


@pytest.mark.criterion(5, "ordering a five-element set")
def test_ordering_five():
    start = time.perf_counter()
    ground = list(range(5))
    for all_subsets in (False, True):
        result = ordering_principle(ground, all_subsets=all_subsets)
        rel = {(x, y) for i, x in enumerate(result) for y in result[i:]}
        assert is_linear_order(rel, ground)
        assert sorted(result) == ground
    _, family = ordering_poset(ground, all_subsets=True)
    seen = set()
    for a, dom in zip(family, family.names):
        if 1 <= len(dom) <= 4:
            assert len(a) == math.factorial(len(dom))
            seen.add(len(dom))
    assert seen == {1, 2, 3, 4}
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(6, "S-consistent choice agrees with brute force on every small instance")
def test_s_consistent_exhaustive():
    alphabet = "abc"
    options = [list(c) for k in range(3) for c in itertools.combinations(alphabet, k)]
    pairs = list(itertools.combinations_with_replacement(alphabet, 2))
    relations = [[p for j, p in enumerate(pairs) if bits >> j & 1] for bits in range(1 << len(pairs))]
    checked = 0
    for size in range(4):
        for chosen in itertools.product(options, repeat=size):
            sets = {i + 1: s for i, s in enumerate(chosen)}
            for rel in relations:
                brute = oracles.s_consistent_choices(sets, rel)
                try:
                    # an empty A_i is rejected up front
                    got = s_consistent_choice(SConsistentInstance(sets, rel))
                except (Unsatisfiable, EmptyMember):
                    got = None
                if brute:
                    assert got is not None and got in brute, (sets, rel)
                else:
                    assert got is None, (sets, rel)
                checked += 1
    assert checked == sum(len(options) ** s for s in range(4)) * 64


def _clauses_within(clauses, variables):
    return [c for c in clauses if all(abs(lit) in variables for lit in c)]


def _satisfiable_on(clauses, variables):
    for values in itertools.product((0, 1), repeat=len(variables)):
        a = dict(zip(variables, values))
        if all(any(a[abs(lit)] == (lit > 0) for lit in c) for c in clauses):
            return True
    return False


@pytest.mark.criterion(7, "CNF messes: consistent functions are the satisfying assignments")
def test_cnf_bridge_exhaustive():
    pool = [
        tuple(v if s > 0 else -v for v, s in zip((1, 2, 3), signs) if s)
        for signs in itertools.product((-1, 0, 1), repeat=3)
        if any(signs)
    ]
    subsets = [vs for k in range(4) for vs in itertools.combinations((1, 2, 3), k)]
    for k in range(4):
        for clauses in itertools.combinations(pool, k):
            cnf = CNF(3, clauses)
            sat = oracles.satisfying_assignments(cnf)
            bad = [vs for vs in subsets if not _satisfiable_on(_clauses_within(clauses, vs), vs)]
            mess = mess_from_cnf(cnf)
            if bad:
                with pytest.raises(CoverageGap) as info:
                    mess.consistent_functions()
                assert tuple(info.value.domain) in bad
                assert not sat
            else:
                assert [dict(f) for f in mess.consistent_functions()] == sat


@pytest.mark.criterion(8, "l1 Hahn-Banach enclosures at depth 12")
def test_hahn_banach_l1():
    start = time.perf_counter()
    l1 = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    tracked = [(1, 0), (0, 1), (1, 1)]
    inst = HahnBanachInstance(2, l1, [(1, 1)], [0], tracked, depth=12)
    enc = hahn_banach_solve(inst)
    widths = enc.widths()
    assert all(isinstance(w, Fraction) for w in widths)
    assert widths == (Fraction(2, 4096), Fraction(2, 4096), Fraction(4, 4096))
    g10, g01, g11 = enc.intervals
    assert 0 in g11
    assert intervals_meet(interval_sum(g10.bounds, g01.bounds), g11.bounds)
    previous = None
    for n in range(13):
        level = hahn_banach_solve(inst, depth=n)
        level.check()
        if previous is not None:
            assert all(g.issubset(h) for g, h in zip(level.intervals, previous.intervals))
        previous = level
    assert previous.intervals == enc.intervals
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(9, "CLI output is byte-identical across runs")
def test_cli_determinism():
    cases = json.loads((DATA / "regression.json").read_text())
    for case in cases:
        outputs = set()
        for seed in ("0", "1", "12345"):
            env = dict(os.environ, PYTHONHASHSEED=seed)
            r = subprocess.run(
                [sys.executable, "-m", "weakchoice", *case["args"], "--no-timing"],
                capture_output=True,
                cwd=DATA,
                env=env,
            )
            assert r.returncode == case["exit"], case["name"]
            outputs.add(r.stdout)
        assert len(outputs) == 1, case["name"]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
