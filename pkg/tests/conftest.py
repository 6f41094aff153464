import random
from itertools import combinations, product

import pytest

from hyperprufer import (
    PruferCode,
    RootedHypertree,
    decode_star,
    enumerate_hypertrees,
    partition_from_parts,
    set_partitions,
    validate,
)

T1_EDGES = [
    (1, 8, 10, 12),
    (1, 2),
    (3, 4, 9),
    (4, 7, 8),
    (5, 14),
    (4, 6),
    (8, 13, 14),
    (7, 11),
]

# glue map of the showcase tree: v -> marked vertex of v's hyperedge
T1_GLUE = {1: 8, 2: 1, 3: 4, 4: 8, 5: 14, 6: 4, 7: 8, 8: 14, 9: 4, 10: 8, 11: 7, 12: 8, 13: 14}

T1_WORD_CLASSIC = (1, 8, 4, 14, 4, 7, 8)
T1_WORD_STAR = (1, 8, 4, 8, 4, 14, 7)

T1_PARTS = ((1, 10, 12), (2,), (3, 9), (4, 7), (5,), (6,), (8, 13), (11,))


@pytest.fixture(scope="session")
def t1() -> RootedHypertree:
    return validate(14, T1_EDGES)


@pytest.fixture(scope="session")
def trivial() -> RootedHypertree:
    return validate(2, [(1, 2)])


@pytest.fixture(scope="session")
def path3() -> RootedHypertree:
    return validate(3, [(1, 2), (2, 3)])


_TREE_CACHE: dict[int, tuple[RootedHypertree, ...]] = {}


def all_trees(n: int) -> tuple[RootedHypertree, ...]:
    """Every rooted hypertree on {1..n}, cached across the suite."""
    if n not in _TREE_CACHE:
        _TREE_CACHE[n] = tuple(enumerate_hypertrees(n))
    return _TREE_CACHE[n]


def all_code_pairs(n: int):
    """Every (partition of a subset of {1..n-1}, word) pair."""
    for size in range(0, n):
        for sub in combinations(range(1, n), size):
            if not sub:
                yield partition_from_parts((), n), ()
                continue
            alphabet = sub + (n,)
            for k in range(1, size + 1):
                for parts in set_partitions(sub, k):
                    partition = partition_from_parts(parts, n)
                    for word in product(alphabet, repeat=k - 1):
                        yield partition, word


def random_star_code(rng: random.Random, n: int) -> PruferCode:
    """A random (partition, word) pair over {1..n}; trees are sampled by
    decoding these codes."""
    labels = [0]
    for _ in range(2, n):
        labels.append(rng.randint(0, max(labels) + 1))
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(labels, start=1):
        groups.setdefault(lab, []).append(v)
    partition = partition_from_parts(groups.values(), n)
    word = tuple(rng.randint(1, n) for _ in range(len(partition.parts) - 1))
    return PruferCode(partition, word, "star")


@pytest.fixture(scope="session")
def random_trees() -> tuple[RootedHypertree, ...]:
    """10^4 random trees with 2 <= n <= 60, via uniform-code sampling."""
    rng = random.Random(0xC0DEC)
    return tuple(decode_star(random_star_code(rng, rng.randint(2, 60))) for _ in range(10_000))
