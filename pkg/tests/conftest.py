import random

import numpy as np
import pytest

from svxnfa.gf2 import BitMatrix, BitVec
from svxnfa.golden import example1, example3, example4


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex3():
    return example3()


@pytest.fixture
def ex4():
    return example4()


@pytest.fixture
def rng():
    return random.Random(20240611)


def np_mat(m: BitMatrix) -> np.ndarray:
    return np.array(m.to_lists(), dtype=np.int64)


def np_vec(v: BitVec) -> np.ndarray:
    return np.array(v.to_list(), dtype=np.int64)


def from_np(a: np.ndarray) -> BitMatrix:
    return BitMatrix.from_lists((a % 2).astype(int).tolist())


def det_mod2(rows) -> int:
    """Leibniz expansion over GF(2): the permanent mod 2 equals the determinant."""
    from itertools import permutations

    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term &= rows[i][j]
            if not term:
                break
        total ^= term
    return total
