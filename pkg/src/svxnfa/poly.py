"""Polynomials over GF(2), companion matrices, and the state/polynomial map.

A polynomial is packed into an int with bit ``i`` holding the coefficient of
``X^i``.  The state ``d`` of an XDFA corresponds to ``sum(d_i X^i)``; with the
row-vector convention of :mod:`svxnfa.gf2`, one transition through the
companion matrix of ``c`` is multiplication by ``X`` modulo ``c``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionError, EnumerationLimitError, PreconditionError
from .gf2 import BitMatrix, BitVec

PRIMITIVE_DEGREE_CAP = 32
PRIMITIVE_ENUM_CAP = 16


@dataclass(frozen=True, order=True)
class Gf2Poly:
    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient bits must be non-negative")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> Gf2Poly:
        """Build from a coefficient list, index ``i`` = coefficient of ``X^i``."""
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError(f"coefficient {i} is {c!r}, expected 0 or 1")
            bits |= c << i
        return cls(bits)

    @classmethod
    def from_exponents(cls, exps: Sequence[int]) -> Gf2Poly:
        bits = 0
        for e in exps:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def parse(cls, text: str) -> Gf2Poly:
        """Parse strings such as ``"X^4+X^3+X^2+1"`` (``x`` also accepted)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial string")
        bits = 0
        for term in s.split("+"):
            m = re.fullmatch(r"([01])|[xX](?:\^(\d+))?", term)
            if m is None:
                raise ValueError(f"cannot parse term {term!r} in {text!r}")
            if m.group(1) is not None:
                bits ^= int(m.group(1))
            else:
                bits ^= 1 << int(m.group(2) or 1)
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def coeffs(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(max(self.degree + 1, 1))]

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(self.bits ^ other.bits)

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(_clmul(self.bits, other.bits))

    def __mod__(self, other: Gf2Poly) -> Gf2Poly:
        return poly_mod(self, other)

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            if (self.bits >> e) & 1:
                terms.append("1" if e == 0 else "X" if e == 1 else f"X^{e}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Gf2Poly({str(self)!r})"


ONE = Gf2Poly(1)
X = Gf2Poly(0b10)
X_PLUS_1 = Gf2Poly(0b11)


def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _divmod(a: int, m: int) -> tuple[int, int]:
    dm = m.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= dm:
        shift = a.bit_length() - 1 - dm
        q ^= 1 << shift
        a ^= m << shift
    return q, a


def _mulmod(a: int, b: int, m: int) -> int:
    return _divmod(_clmul(a, b), m)[1]


def _powmod(a: int, e: int, m: int) -> int:
    result = _divmod(1, m)[1]
    a = _divmod(a, m)[1]
    while e:
        if e & 1:
            result = _mulmod(result, a, m)
        a = _mulmod(a, a, m)
        e >>= 1
    return result


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def poly_add(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(p.bits ^ q.bits)


def poly_mul(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_clmul(p.bits, q.bits))


def poly_divmod(p: Gf2Poly, m: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    if m.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q, r = _divmod(p.bits, m.bits)
    return Gf2Poly(q), Gf2Poly(r)


def poly_mod(p: Gf2Poly, m: Gf2Poly) -> Gf2Poly:
    return poly_divmod(p, m)[1]


def poly_gcd(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_gcd(p.bits, q.bits))


def companion_matrix(c: Gf2Poly) -> BitMatrix:
    """Normal-form matrix of a monic ``c`` of degree ``n >= 1``.

    Row ``i < n-1`` is the unit vector ``e_{i+1}``; the last row holds
    ``[c_0, ..., c_{n-1}]``.
    """
    n = c.degree
    if n < 1:
        raise PreconditionError(f"companion matrix needs degree >= 1, got {c}")
    rows = [1 << (i + 1) for i in range(n - 1)]
    rows.append(c.bits ^ (1 << n))
    return BitMatrix(n, tuple(rows))


def char_poly(m: BitMatrix) -> Gf2Poly:
    """``det(XI - M)`` via Hessenberg reduction and the Hessenberg recurrence."""
    n = m.n
    h = m.to_lists()
    # similarity transforms to upper Hessenberg form
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        for k in range(j + 2, n):
            if h[k][j]:
                # row_k -= row_{j+1}, then col_{j+1} += col_k
                h[k] = [a ^ b for a, b in zip(h[k], h[j + 1])]
                for row in h:
                    row[j + 1] ^= row[k]
    # p[k] = char poly of the leading k x k block
    p = [1]
    for k in range(1, n + 1):
        acc = _clmul(0b10 | h[k - 1][k - 1], p[k - 1])
        sub = 1
        for i in range(1, k):
            sub &= h[k - i][k - i - 1]
            if not sub:
                break
            if h[k - i - 1][k - 1]:
                acc ^= p[k - i - 1]
        p.append(acc)
    return Gf2Poly(p[n])


def is_irreducible(p: Gf2Poly) -> bool:
    """Ben-Or test: ``gcd(p, X^(2^i) - X mod p) = 1`` for ``i <= deg(p)/2``."""
    d = p.degree
    if d < 1:
        raise PreconditionError(f"irreducibility needs degree >= 1, got {p}")
    if d == 1:
        return True
    xp = 0b10
    for _ in range(d // 2):
        xp = _mulmod(xp, xp, p.bits)
        if _gcd(p.bits, xp ^ 0b10) != 1:
            return False
    return True


def _prime_factors(k: int) -> list[int]:
    out = []
    f = 2
    while f * f <= k:
        if k % f == 0:
            out.append(f)
            while k % f == 0:
                k //= f
        f += 1 if f == 2 else 2
    if k > 1:
        out.append(k)
    return out


def is_primitive(p: Gf2Poly) -> bool:
    """Irreducible, and ``X`` has multiplicative order ``2^m - 1`` modulo ``p``."""
    m = p.degree
    if m < 1:
        raise PreconditionError(f"primitivity needs degree >= 1, got {p}")
    if m > PRIMITIVE_DEGREE_CAP:
        raise EnumerationLimitError(f"degree {m} exceeds primitivity cap {PRIMITIVE_DEGREE_CAP}")
    if not is_irreducible(p):
        return False
    order = (1 << m) - 1
    if _powmod(0b10, order, p.bits) != 1:
        return False
    return all(_powmod(0b10, order // r, p.bits) != 1 for r in _prime_factors(order))


def has_factor_x_plus_1(p: Gf2Poly) -> bool:
    """True iff ``p(1) = 0``, i.e. ``p`` has an even number of terms."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return p.weight() % 2 == 0


def state_to_poly(d: BitVec) -> Gf2Poly:
    return Gf2Poly(d.bits)


def poly_to_state(p: Gf2Poly, n: int) -> BitVec:
    if p.degree >= n:
        raise DimensionError(f"{p} has degree {p.degree}, needs < {n}")
    return BitVec(n, p.bits)


def enumerate_primitive(m: int) -> Iterator[Gf2Poly]:
    """Primitive polynomials of degree ``m`` in lexicographic coefficient order.

    Coefficients are compared from ``X^(m-1)`` down to ``X^0`` (equivalently,
    ascending packed value), so ``X^3+X+1`` precedes ``X^3+X^2+1``.
    """
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    if m > PRIMITIVE_ENUM_CAP:
        raise EnumerationLimitError(f"degree {m} exceeds enumeration cap {PRIMITIVE_ENUM_CAP}")
    for low in range(1 << m):
        p = Gf2Poly((1 << m) | low)
        if is_primitive(p):
            yield p
