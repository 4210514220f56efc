import random
from fractions import Fraction
from pathlib import Path

import pytest

from blocksieve.blocks import BlockIndex, BlockSystem

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS_DIR


def random_system(rng: random.Random, max_level=4, max_d=3, symmetric=False) -> BlockSystem:
    """A structurally valid (not necessarily rule-passing) block system."""
    r = rng.randint(1, 5)
    blocks = {}
    if rng.random() < 0.9:
        blocks[BlockIndex(0, 1, 1)] = r
    for _ in range(rng.randint(0, 8)):
        n = rng.randint(0, max_level)
        d1 = rng.randint(1, max_d)
        d2 = d1 if n == 0 else rng.randint(1, max_d)
        v = rng.randint(1, 30)
        blocks[BlockIndex(n, d1, d2)] = v
        if symmetric and n >= 1:
            blocks[BlockIndex(n, d2, d1)] = v
    return BlockSystem(r, blocks)


def random_change_of_basis(rng: random.Random, n: int):
    """Invertible rational matrix: a product of elementary shears."""
    P = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        for k in range(n):
            P[i][k] += c * P[j][k]
    return P
