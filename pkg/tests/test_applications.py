import itertools
import math
import random

import pytest

from weakchoice import oracles
from weakchoice.applications.choice import (
    SConsistentInstance,
    choice_function_poset,
    koenig_choice,
    s_consistent_choice,
)
from weakchoice.applications.ordering import (
    is_linear_order,
    ordering_poset,
    ordering_principle,
    union_linear_order,
)
from weakchoice.errors import BlocksOverlap, CapExceeded, EmptyMember, Unsatisfiable


# -- ordering ---------------------------------------------------------------------


def test_ordering_three():
    assert ordering_principle([1, 2, 3]) == (1, 2, 3)
    _, family = ordering_poset([1, 2, 3])
    assert len(family[-1]) == 6


def test_ordering_singleton_and_empty():
    assert ordering_principle(["x"]) == ("x",)
    assert ordering_principle([]) == ()


def test_ordering_cap():
    with pytest.raises(CapExceeded):
        ordering_principle(range(7))


@pytest.mark.parametrize("n", range(1, 6))
def test_ordering_is_linear(n):
    ground = list("edcba")[:n]
    for all_subsets in (False, True):
        result = ordering_principle(ground, all_subsets=all_subsets)
        rel = {(x, y) for i, x in enumerate(result) for y in result[i:]}
        assert is_linear_order(rel, ground)
        # canonical search keeps the input order
        assert result == tuple(ground)


def test_antichain_sizes_are_factorials():
    _, family = ordering_poset(range(4), all_subsets=True)
    for dom, a in zip(family.names, family):
        assert len(a) == math.factorial(len(dom))
    assert sorted({len(a) for a in family}) == [1, 2, 6, 24]


def test_ordering_poset_shape():
    order, family = ordering_poset("ab")
    # (), (a), (b), (a, b), (b, a)
    assert len(order) == 5
    assert order.leq(("a", "b"), ("a",)) and order.leq(("b", "a"), ("a",))
    assert not order.compatible(("a", "b"), ("b", "a"))


def test_union_linear_order_examples():
    assert union_linear_order([["a", "b"], ["c"]], [["a", "b"], ["c"]]) == ("a", "b", "c")
    assert union_linear_order([["x", "y", "z"]], [["z", "x", "y"]]) == ("z", "x", "y")
    assert union_linear_order([], []) == ()
    with pytest.raises(BlocksOverlap):
        union_linear_order([["a"], ["a", "b"]], [["a"], ["a", "b"]])


def test_union_linear_order_respects_blocks():
    rng = random.Random(40)
    for _ in range(50):
        items = list(range(rng.randint(0, 12)))
        rng.shuffle(items)
        cuts = sorted(rng.sample(range(len(items) + 1), min(3, len(items) + 1)))
        blocks = [items[a:b] for a, b in zip([0] + cuts, cuts + [len(items)]) if b > a]
        orders = [rng.sample(b, len(b)) for b in blocks]
        result = union_linear_order(blocks, orders)
        for block, seq in zip(blocks, orders):
            assert [x for x in result if x in block] == seq
        position = {x: i for i, x in enumerate(result)}
        for (i, b1), (j, b2) in itertools.combinations(enumerate(blocks), 2):
            assert max(position[x] for x in b1) < min(position[y] for y in b2)


# -- choice -----------------------------------------------------------------------


def test_choice_examples():
    assert choice_function_poset([["a", "b"], ["c"]]) == ("a", "c")
    assert choice_function_poset([["a"]]) == ("a",)
    with pytest.raises(EmptyMember):
        choice_function_poset([["a"], []])


def test_koenig_examples():
    assert koenig_choice([["a", "b"], ["c"]]) == ("a", "c")
    with pytest.raises(EmptyMember):
        koenig_choice([[]])


def test_choice_random_families():
    rng = random.Random(41)
    for _ in range(60):
        family = [rng.sample("pqrst", rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        for fn in (choice_function_poset, koenig_choice):
            chosen = fn(family)
            assert all(c in x for c, x in zip(chosen, family))
            assert chosen == tuple(x[0] for x in family)


def test_choice_dense_sets_are_dense():
    # the D_i used by the construction, rebuilt independently
    from weakchoice.order import order_from_predicate

    family = [["a", "b"], ["c"], ["d", "e"]]
    elements = [
        tuple(zip(dom, vals))
        for k in range(4)
        for dom in itertools.combinations(range(3), k)
        for vals in itertools.product(*(family[i] for i in dom))
    ]
    order = order_from_predicate(elements, lambda p, q: set(q) <= set(p))
    for i in range(3):
        assert order.is_dense([p for p in elements if i in dict(p)])


# -- S-consistent choice --------------------------------------------------------------


def test_s_choice_examples():
    inst = SConsistentInstance({1: ["a", "b"], 2: ["c"]}, [("b", "b"), ("c", "c"), ("b", "c")])
    assert s_consistent_choice(inst) == {1: "b", 2: "c"}
    single = SConsistentInstance({1: ["a"]}, [("a", "a")])
    assert s_consistent_choice(single) == {1: "a"}


def test_s_choice_empty_relation():
    inst = SConsistentInstance({1: ["a"], 2: ["b"]}, [])
    with pytest.raises(Unsatisfiable) as info:
        s_consistent_choice(inst)
    assert info.value.witness == (1,)


def test_s_choice_relation_is_symmetrised():
    inst = SConsistentInstance({1: ["a"]}, [("a", "b")])
    assert inst.related("b", "a")


def test_s_choice_pairwise_but_not_global():
    inst = SConsistentInstance(
        {1: ["a", "b"], 2: ["a", "b"], 3: ["a", "b"]},
        [("a", "a"), ("b", "b")],
    )
    assert s_consistent_choice(inst) in ({1: "a", 2: "a", 3: "a"}, {1: "b", 2: "b", 3: "b"})
    # every pair of indices has a consistent choice, the whole set does not
    odd = SConsistentInstance({1: ["a", "b"], 2: ["b", "c"], 3: ["c", "a"]}, [("a", "a"), ("b", "b"), ("c", "c")])
    with pytest.raises(Unsatisfiable):
        s_consistent_choice(odd)
    assert not oracles.s_consistent_choices(odd.sets, odd.relation)


def test_s_choice_all_subsets_agrees():
    rng = random.Random(42)
    alphabet = "abc"
    pairs = list(itertools.combinations_with_replacement(alphabet, 2))
    for _ in range(150):
        sets = {i: rng.sample(alphabet, rng.randint(1, 2)) for i in range(rng.randint(1, 4))}
        rel = [p for p in pairs if rng.random() < 0.6]
        inst = SConsistentInstance(sets, rel)
        results = []
        for flag in (False, True):
            try:
                results.append(s_consistent_choice(inst, all_subsets=flag))
            except Unsatisfiable:
                results.append(None)
        assert (results[0] is None) == (results[1] is None)
        brute = oracles.s_consistent_choices(inst.sets, inst.relation)
        assert (results[0] is None) == (not brute)
