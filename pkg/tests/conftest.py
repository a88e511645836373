import random

import pytest

from multiplex.weyl import ParabolicSpec


def random_labels(rng: random.Random, rank: int, zero_rate: float = 0.0, top: int = 20):
    return tuple(0 if rng.random() < zero_rate else rng.randint(1, top) for _ in range(rank))


def equal_block_spec(rng: random.Random, sizes=(2, 4, 6, 8)) -> ParabolicSpec:
    n = rng.choice(sizes)
    return ParabolicSpec(n, n // 2)


@pytest.fixture
def rng():
    return random.Random(20240611)
