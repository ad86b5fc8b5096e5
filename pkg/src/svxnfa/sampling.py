"""Seeded generators for words, polynomials and machines used in experiments."""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator, Sequence

from .automata import Xnfa
from .gf2 import BitVec, random_gl
from .poly import X_PLUS_1, Gf2Poly, companion_matrix


def all_words(alphabet: Sequence[str], max_len: int) -> Iterator[tuple[str, ...]]:
    """Every word of length ``0..max_len`` in length-lexicographic order."""
    for k in range(max_len + 1):
        yield from product(alphabet, repeat=k)


def random_monic(degree: int, rng: random.Random, nonzero_constant: bool = True) -> Gf2Poly:
    low = rng.getrandbits(degree) if degree else 0
    if nonzero_constant:
        low |= 1
    return Gf2Poly((1 << degree) | low)


def random_x1_divisible(degree: int, rng: random.Random) -> Gf2Poly:
    """Random ``(X+1) g(X)`` of the given degree with ``g(0) = 1`` (non-singular companion)."""
    return X_PLUS_1 * random_monic(degree - 1, rng)


def random_odd_machine(n: int, rng: random.Random, alphabet=("a", "b")) -> Xnfa:
    """Canonical matrices of X+1-divisible polynomials, ``q0 = {q_0}``."""
    mats = tuple(companion_matrix(random_x1_divisible(n, rng)) for _ in alphabet)
    q0 = BitVec.unit(n, 0)
    return Xnfa(tuple(alphabet), mats, q0, q0, q0.complement())


def random_xnfa(n: int, rng: random.Random, alphabet=("a", "b")) -> Xnfa:
    """Uniform non-singular matrices with random non-empty ``q0`` and random finals."""
    mats = tuple(random_gl(n, rng) for _ in alphabet)
    q0 = BitVec(n, rng.randrange(1, 1 << n))
    fa = BitVec(n, rng.getrandbits(n))
    fr = BitVec(n, rng.getrandbits(n))
    return Xnfa(tuple(alphabet), mats, q0, fa, fr)
