"""Dense linear algebra over GF(2).

Vectors and matrices are packed into Python integers: bit ``i`` of a
:class:`BitVec` is the entry for state ``q_i``, and row ``q`` of a
:class:`BitMatrix` is the packed image set of ``q``.  States evolve as row
vectors, ``v' = v . M``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, EnumerationLimitError, SingularMatrixError

MAX_DIM = 24
GL_ENUM_CAP = 4


def _check_dim(n: int, max_dim: int | None = None) -> None:
    limit = MAX_DIM if max_dim is None else max_dim
    if n < 1:
        raise DimensionError(f"dimension must be >= 1, got {n}")
    if n > limit:
        raise DimensionError(f"dimension {n} exceeds cap {limit}")


def parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True)
class BitVec:
    """A length-``n`` vector over GF(2), i.e. a subset of ``{q_0..q_{n-1}}``."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"length must be >= 1, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.n}")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> BitVec:
        bits = 0
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"entry {i} is {v!r}, expected 0 or 1")
            bits |= v << i
        return cls(len(values), bits)

    @classmethod
    def from_states(cls, n: int, states: Iterable[int]) -> BitVec:
        bits = 0
        for q in states:
            if not 0 <= q < n:
                raise DimensionError(f"state index {q} out of range for n={n}")
            bits |= 1 << q
        return cls(n, bits)

    @classmethod
    def zeros(cls, n: int) -> BitVec:
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> BitVec:
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> BitVec:
        return cls.from_states(n, [i])

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.n)]

    def states(self) -> list[int]:
        """Indices of the 1-bits, ascending."""
        return [i for i in range(self.n) if (self.bits >> i) & 1]

    def popcount(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def dot(self, other: BitVec) -> int:
        """Inner product over GF(2)."""
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")
        return parity(self.bits & other.bits)

    def complement(self) -> BitVec:
        return BitVec(self.n, self.bits ^ ((1 << self.n) - 1))

    def __xor__(self, other: BitVec) -> BitVec:
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")
        return BitVec(self.n, self.bits ^ other.bits)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not -self.n <= i < self.n:
            raise IndexError(i)
        return (self.bits >> (i % self.n)) & 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    def __str__(self) -> str:
        return "{" + ",".join(f"q{i}" for i in self.states()) + "}"

    def __repr__(self) -> str:
        return f"BitVec({self.to_list()})"


@dataclass(frozen=True)
class BitMatrix:
    """An ``n x n`` matrix over GF(2); ``rows[q]`` packs the image set of ``q``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError(f"dimension must be >= 1, got {self.n}")
        if len(self.rows) != self.n:
            raise DimensionError(f"expected {self.n} rows, got {len(self.rows)}")
        for i, r in enumerate(self.rows):
            if r < 0 or r >> self.n:
                raise ValueError(f"row {i} ({r:#x}) does not fit in {self.n} columns")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        n = len(rows)
        packed = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionError(f"row {i} has length {len(row)}, matrix is not square")
            packed.append(BitVec.from_list(row).bits)
        return cls(n, tuple(packed))

    @classmethod
    def from_vecs(cls, rows: Sequence[BitVec]) -> BitMatrix:
        n = len(rows)
        for i, r in enumerate(rows):
            if r.n != n:
                raise DimensionError(f"row {i} has length {r.n}, expected {n}")
        return cls(n, tuple(r.bits for r in rows))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> BitMatrix:
        return cls(n, (0,) * n)

    def to_lists(self) -> list[list[int]]:
        return [BitVec(self.n, r).to_list() for r in self.rows]

    def row(self, i: int) -> BitVec:
        return BitVec(self.n, self.rows[i])

    def transpose(self) -> BitMatrix:
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            for j in range(self.n):
                if (r >> j) & 1:
                    cols[j] |= 1 << i
        return BitMatrix(self.n, tuple(cols))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return mat_mul(self, other)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.to_lists())

    def __repr__(self) -> str:
        return f"BitMatrix({self.to_lists()})"


def _xor_rows(bits: int, rows: Sequence[int]) -> int:
    out = 0
    i = 0
    while bits:
        if bits & 1:
            out ^= rows[i]
        bits >>= 1
        i += 1
    return out


def vec_mat_mul(v: BitVec, m: BitMatrix) -> BitVec:
    """Row-vector product ``v . M``: the XOR of the rows of ``M`` selected by ``v``."""
    if v.n != m.n:
        raise DimensionError(f"vector length {v.n} does not match matrix size {m.n}")
    return BitVec(m.n, _xor_rows(v.bits, m.rows))


def mat_vec_mul(m: BitMatrix, v: BitVec) -> BitVec:
    """Column product ``M . v^T``, returned as a row vector."""
    if v.n != m.n:
        raise DimensionError(f"vector length {v.n} does not match matrix size {m.n}")
    bits = 0
    for i, r in enumerate(m.rows):
        bits |= parity(r & v.bits) << i
    return BitVec(m.n, bits)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.n != b.n:
        raise DimensionError(f"size mismatch: {a.n} vs {b.n}")
    return BitMatrix(a.n, tuple(_xor_rows(r, b.rows) for r in a.rows))


def mat_product(mats: Iterable[BitMatrix], n: int) -> BitMatrix:
    """Left-to-right product; the empty product is the ``n x n`` identity."""
    return reduce(mat_mul, mats, BitMatrix.identity(n))


def row_reduce(rows: list[int], n: int) -> tuple[list[int], list[int], list[int]]:
    """Gauss-Jordan on packed rows, tracking which original rows each row combines.

    Returns ``(reduced, provenance, pivots)`` where ``pivots[k]`` is the pivot
    column of reduced row ``k`` for ``k < rank``.  Pivot choice takes the first
    row with a 1 in the column, so the result is deterministic.
    """
    rows = list(rows)
    prov = [1 << i for i in range(len(rows))]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        bit = 1 << col
        p = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prov[r], prov[p] = prov[p], prov[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
                prov[i] ^= prov[r]
        pivots.append(col)
        r += 1
    return rows, prov, pivots


def rank(m: BitMatrix) -> int:
    return len(row_reduce(list(m.rows), m.n)[2])


def is_nonsingular(m: BitMatrix) -> bool:
    return rank(m) == m.n


def invert(m: BitMatrix) -> BitMatrix:
    """Inverse by Gauss-Jordan elimination.

    Raises:
        SingularMatrixError: if ``m`` has rank below ``n``; the error carries
            a set of row indices whose XOR vanishes.
    """
    n = m.n
    rows, prov, pivots = row_reduce(list(m.rows), n)
    if len(pivots) < n:
        dep = prov[len(pivots)]
        dependent = tuple(i for i in range(n) if (dep >> i) & 1)
        raise SingularMatrixError(
            f"matrix is singular (rank {len(pivots)} < {n}); rows {list(dependent)} sum to zero",
            dependent,
        )
    # reduced rows are unit vectors e_{pivots[k]} = sum of original rows in prov[k],
    # so (prov as matrix) . M = permutation; reorder by pivot column.
    inv = [0] * n
    for k, col in enumerate(pivots):
        inv[col] = prov[k]
    return BitMatrix(n, tuple(inv))


def gl_order(n: int) -> int:
    """Number of non-singular ``n x n`` matrices over GF(2)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = 1
    for k in range(n):
        total *= (1 << n) - (1 << k)
    return total


def random_gl(n: int, seed: int | random.Random | None = None) -> BitMatrix:
    """Uniform sample from GL(n, GF(2)) by rejection sampling.

    Roughly 29% of random matrices are non-singular for large ``n``, so the
    expected number of draws is below four.
    """
    _check_dim(n)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        m = BitMatrix(n, tuple(rng.getrandbits(n) for _ in range(n)))
        if is_nonsingular(m):
            return m


def enumerate_gl(n: int, cap: int = GL_ENUM_CAP) -> Iterator[BitMatrix]:
    """Yield every non-singular ``n x n`` matrix exactly once.

    Rows are chosen in ascending packed order, each outside the span of the
    rows before it.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise EnumerationLimitError(
            f"enumerating GL({n}, 2) ({gl_order(n)} matrices) exceeds cap {cap}; use random_gl"
        )

    def extend(prefix: tuple[int, ...], span: frozenset[int]) -> Iterator[BitMatrix]:
        if len(prefix) == n:
            yield BitMatrix(n, prefix)
            return
        for r in range(1, 1 << n):
            if r not in span:
                yield from extend(prefix + (r,), span | {s ^ r for s in span})

    yield from extend((), frozenset({0}))


def all_matrices(n: int) -> Iterator[BitMatrix]:
    """Every ``n x n`` matrix over GF(2); only sensible for tiny ``n``."""
    for rows in product(range(1 << n), repeat=n):
        yield BitMatrix(n, rows)
