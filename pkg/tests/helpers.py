"""Instance generators shared by the test modules."""

from __future__ import annotations

import itertools
import random

from weakchoice.mess import PartialBinaryFunction, build_mess, domains, total_functions
from weakchoice.order import build_order, bits


def fork():
    return build_order("abc", [("a", "c"), ("b", "c")])


def chain(n: int):
    return build_order(list(range(n)), [(i, i + 1) for i in range(n - 1)])


def antichain_order(labels):
    return build_order(list(labels), [])


def pairwise_order():
    """Three elements, each pair with a common extension, no triple."""
    return build_order(
        ["a", "b", "c", "ab", "bc", "ac"],
        [("ab", "a"), ("ab", "b"), ("bc", "b"), ("bc", "c"), ("ac", "a"), ("ac", "c")],
    )


def all_posets(n: int):
    """Every labeled partial order on ``range(n)`` (by strict relation)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for chosen in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if chosen >> k & 1}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            continue
        yield build_order(list(range(n)), sorted(rel))


def random_poset(rng: random.Random, n: int, density: float = 0.35):
    """Random strict pairs oriented along a shuffled linear order, closed."""
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return build_order(list(range(n)), pairs)


def random_preorder(rng: random.Random, n: int, density: float = 0.2):
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density]
    return build_order(list(range(n)), pairs, kind="preorder")


def random_antichain(rng: random.Random, order, size: int, seed_element=None) -> list[int]:
    """Greedy random antichain of at most ``size`` element indices."""
    pool = list(range(len(order)))
    rng.shuffle(pool)
    chosen = [] if seed_element is None else [seed_element]
    for e in pool:
        if len(chosen) >= size:
            break
        if all(not (order.compat_mask(e) >> c & 1) for c in chosen):
            chosen.append(e)
    return chosen


def random_family(rng: random.Random, order, k: int, max_size: int = 3):
    return [
        [order.label(e) for e in random_antichain(rng, order, rng.randint(1, max_size))]
        for _ in range(k)
    ]


def random_centred_family(rng: random.Random, order, k: int, max_size: int = 3):
    """Antichains that each contain an element above one random witness."""
    witness = rng.randrange(len(order))
    above = list(bits(order.up_mask(witness)))
    family = []
    for _ in range(k):
        seed = rng.choice(above)
        family.append([order.label(e) for e in random_antichain(rng, order, rng.randint(1, max_size), seed)])
    return family


def random_mess(rng: random.Random, ground, extra: int = 4):
    """Restriction closure of one or more total functions plus random partials."""
    totals = list(total_functions(ground))
    members = rng.sample(totals, rng.randint(1, len(totals)))
    doms = list(domains(ground))
    for _ in range(rng.randint(0, extra)):
        dom = rng.choice(doms)
        members.append(PartialBinaryFunction({x: rng.randint(0, 1) for x in dom}))
    return build_mess(ground, members, close=True)


def subsets_of(seq):
    for k in range(len(seq) + 1):
        yield from itertools.combinations(seq, k)
