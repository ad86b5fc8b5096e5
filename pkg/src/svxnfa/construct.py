"""Witness machines with ``2^(n-1)`` XDFA states, and change of basis.

The binary witness uses the companion matrix of ``(X+1) phi(X)`` on ``a``
and of ``X^n + phi(X)`` on ``b``, for a primitive ``phi`` of degree
``n-1``, with ``q0 = fa = {q_0}`` and ``fr`` the remaining states.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass
from itertools import permutations

from .automata import (
    DEFAULT_MAX_STATES,
    Xnfa,
    canonical_form,
    determinize,
    minimize,
    xdfa_isomorphic,
)
from .errors import PreconditionError, SvxnfaError
from .gf2 import (
    GL_ENUM_CAP,
    BitMatrix,
    BitVec,
    enumerate_gl,
    gl_order,
    invert,
    is_nonsingular,
    mat_mul,
    mat_vec_mul,
    random_gl,
    vec_mat_mul,
)
from .poly import (
    X,
    X_PLUS_1,
    Gf2Poly,
    char_poly,
    companion_matrix,
    enumerate_primitive,
    has_factor_x_plus_1,
    is_primitive,
)
from .sv import check_sv

# n=2 needs a degree-1 phi.  X+1 is primitive but makes c_b = X^2+X+1, which
# lacks the X+1 factor (3 reachable states); X gives the expected 2 states
# at the price of singular matrices.
N2_BOUNDARY_NOTE = (
    "n=2 boundary: phi=X (not primitive) gives singular matrices but exactly 2 "
    "reachable states; the primitive phi=X+1 gives c_b=X^2+X+1 without an X+1 "
    "factor and 3 reachable states"
)


@dataclass(frozen=True)
class WitnessSpec:
    n: int
    phi: Gf2Poly
    c_a: Gf2Poly
    c_b: Gf2Poly
    note: str | None = None

    @property
    def primitive(self) -> bool:
        return is_primitive(self.phi)


def witness_spec(n: int, phi: Gf2Poly | None = None) -> WitnessSpec:
    if n < 2:
        raise PreconditionError(f"witness needs n >= 2, got {n}")
    note = None
    if phi is None:
        phi = X if n == 2 else next(enumerate_primitive(n - 1))
    if phi.degree != n - 1:
        raise PreconditionError(f"phi={phi} has degree {phi.degree}, expected {n - 1}")
    if n == 2 and phi in (X, X_PLUS_1):
        note = N2_BOUNDARY_NOTE
    elif not is_primitive(phi):
        raise PreconditionError(f"phi={phi} is not primitive")
    c_a = X_PLUS_1 * phi
    c_b = Gf2Poly(1 << n) + phi
    return WitnessSpec(n, phi, c_a, c_b, note)


def symbols(m: int) -> tuple[str, ...]:
    if m <= 26:
        return tuple(string.ascii_lowercase[:m])
    return tuple(f"s{i}" for i in range(m))


def build_witness(n: int, phi: Gf2Poly | None = None) -> Xnfa:
    """Binary witness machine; ``phi`` defaults to the first primitive polynomial."""
    return build_mary_witness(n, 2, phi)


def build_mary_witness(n: int, m: int, phi: Gf2Poly | None = None) -> Xnfa:
    """Witness over ``m`` symbols; symbols after ``b`` reuse the ``b`` matrix."""
    if m < 2:
        raise PreconditionError(f"alphabet size must be >= 2, got {m}")
    spec = witness_spec(n, phi)
    ma = companion_matrix(spec.c_a)
    mb = companion_matrix(spec.c_b)
    q0 = BitVec.unit(n, 0)
    singular = not (is_nonsingular(ma) and is_nonsingular(mb))
    return Xnfa(symbols(m), (ma,) + (mb,) * (m - 1), q0, q0, q0.complement(), singular)


def witness_xdfa_size(n: int, max_states: int = DEFAULT_MAX_STATES) -> int:
    return len(determinize(build_witness(n), max_states))


def change_basis(nfa: Xnfa, a: BitMatrix) -> Xnfa:
    """Conjugate every matrix by ``a``: ``M' = A^-1 M A``, ``q0' = q0 A``, ``f'^T = A^-1 f^T``.

    Word weights, and hence acceptance and rejection, are unchanged.
    """
    if a.n != nfa.n:
        raise PreconditionError(f"basis matrix is {a.n}x{a.n}, machine has {nfa.n} states")
    a_inv = invert(a)
    return Xnfa(
        nfa.alphabet,
        tuple(mat_mul(mat_mul(a_inv, m), a) for m in nfa.matrices),
        vec_mat_mul(nfa.q0, a),
        mat_vec_mul(a_inv, nfa.fa),
        mat_vec_mul(a_inv, nfa.fr),
        nfa.allow_singular,
    )


def _basis_matrices(n: int, count: int, seed) -> list[BitMatrix]:
    identity = BitMatrix.identity(n)
    rng = random.Random(seed)
    if n <= GL_ENUM_CAP:
        pool = [a for a in enumerate_gl(n) if a != identity]
        if count > len(pool):
            raise PreconditionError(
                f"count {count} exceeds |GL({n},2)| - 1 = {gl_order(n) - 1}"
            )
        return pool if count == len(pool) else rng.sample(pool, count)
    if count > gl_order(n) - 1:
        raise PreconditionError(f"count {count} exceeds |GL({n},2)| - 1")
    chosen: dict[BitMatrix, None] = {}
    while len(chosen) < count:
        a = random_gl(n, rng)
        if a != identity:
            chosen.setdefault(a)
    return list(chosen)


def xnfa_canonical_key(nfa: Xnfa) -> tuple:
    """Smallest encoding of ``nfa`` over all relabellings of its states."""
    n = nfa.n
    best = None
    for perm in permutations(range(n)):

        def relabel(bits: int) -> int:
            return sum(1 << perm[i] for i in range(n) if (bits >> i) & 1)

        key = []
        for m in nfa.matrices:
            rows = [0] * n
            for i, r in enumerate(m.rows):
                rows[perm[i]] = relabel(r)
            key.append(tuple(rows))
        key.append((relabel(nfa.q0.bits), relabel(nfa.fa.bits), relabel(nfa.fr.bits)))
        key = tuple(key)
        if best is None or key < best:
            best = key
    return best


def equivalent_family(
    nfa: Xnfa,
    count: int,
    seed=0,
    *,
    verify: bool = True,
    dedupe_isomorphic: bool = False,
) -> list[Xnfa]:
    """``count`` change-of-basis images of ``nfa`` under distinct non-identity matrices.

    Matrices come from full enumeration of GL(n, 2) for ``n <= 4`` and from
    seeded rejection sampling otherwise.  With ``verify`` each member is
    checked for an isomorphic XDFA and, if ``nfa`` is self-verifying, for
    the SV condition.  ``dedupe_isomorphic`` (``n <= 6``) drops members whose
    transition structure is a state relabelling of an earlier one, so fewer
    than ``count`` machines may come back.
    """
    if count < 1:
        raise PreconditionError(f"count must be >= 1, got {count}")
    if dedupe_isomorphic and nfa.n > 6:
        raise PreconditionError("isomorphism filtering is limited to n <= 6")
    base_dfa = determinize(nfa) if verify else None
    base_sv = verify and check_sv(nfa) is None
    out = []
    seen = set()
    for a in _basis_matrices(nfa.n, count, seed):
        member = change_basis(nfa, a)
        if verify:
            if not xdfa_isomorphic(base_dfa, determinize(member)):
                raise SvxnfaError(f"basis change by {a!r} altered the XDFA structure")
            if base_sv and check_sv(member) is not None:
                raise SvxnfaError(f"basis change by {a!r} broke the SV condition")
        if dedupe_isomorphic:
            key = xnfa_canonical_key(member)
            if key in seen:
                continue
            seen.add(key)
        out.append(member)
    return out


def check_equivalence(n1: Xnfa, n2: Xnfa, max_states: int = DEFAULT_MAX_STATES) -> bool:
    """Exact language equality via minimal XDFAs.

    Raises:
        SvViolationError: either machine is not self-verifying.
    """
    if n1.alphabet != n2.alphabet:
        raise PreconditionError(f"alphabet mismatch: {n1.alphabet} vs {n2.alphabet}")
    m1 = minimize(determinize(n1, max_states))
    m2 = minimize(determinize(n2, max_states))
    return canonical_form(m1) == canonical_form(m2)


def has_odd_hypothesis(nfa: Xnfa) -> bool:
    """Every characteristic polynomial divisible by ``X+1`` and ``|q0|`` odd."""
    return nfa.q0.popcount() % 2 == 1 and all(
        has_factor_x_plus_1(char_poly(m)) for m in nfa.matrices
    )
