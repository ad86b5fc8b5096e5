"""Self-verifying condition: checking it, and solving for every assignment.

A subset-state ``d`` is valid iff ``<d, fa> xor <d, fr> = 1``.  That is
linear in ``u = fa xor fr``, so the valid assignments of a machine are the
splits of the solutions of ``<d, u> = 1`` over its reachable states.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .automata import DEFAULT_MAX_STATES, Verdict, Xdfa, Xnfa, determinize
from .errors import PreconditionError
from .gf2 import BitVec, row_reduce
from .poly import char_poly, has_factor_x_plus_1


@dataclass(frozen=True)
class SvAssignment:
    fa: BitVec
    fr: BitVec

    @property
    def trivial(self) -> bool:
        return self.fa.is_zero() or self.fr.is_zero()

    @property
    def overlap(self) -> BitVec:
        return BitVec(self.fa.n, self.fa.bits & self.fr.bits)


@dataclass(frozen=True)
class SvCounterexample:
    state: BitVec
    verdict: Verdict
    index: int


@dataclass(frozen=True)
class SvSolutionSpace:
    """Solutions ``u`` of ``<d, u> = 1`` for every reachable ``d``.

    The full set is ``particular xor span(homogeneous_basis)`` when
    ``satisfiable``; otherwise ``particular`` is ``None``.
    """

    n: int
    particular: BitVec | None
    homogeneous_basis: tuple[BitVec, ...]
    satisfiable: bool

    def __len__(self) -> int:
        return (1 << len(self.homogeneous_basis)) if self.satisfiable else 0

    def __iter__(self) -> Iterator[BitVec]:
        if not self.satisfiable:
            return
        for coeffs in product((0, 1), repeat=len(self.homogeneous_basis)):
            u = self.particular.bits
            for c, b in zip(coeffs, self.homogeneous_basis):
                if c:
                    u ^= b.bits
            yield BitVec(self.n, u)

    def __contains__(self, u: BitVec) -> bool:
        if not self.satisfiable:
            return False
        rows = [b.bits for b in self.homogeneous_basis]
        target = u.bits ^ self.particular.bits
        reduced, _, pivots = row_reduce(rows, self.n)
        for k, col in enumerate(pivots):
            if (target >> col) & 1:
                target ^= reduced[k]
        return target == 0


def check_sv(nfa: Xnfa, max_states: int = DEFAULT_MAX_STATES) -> SvCounterexample | None:
    """First reachable state (in BFS order) violating the SV condition, or ``None``."""
    return first_violation(determinize(nfa, max_states))


def first_violation(dfa: Xdfa) -> SvCounterexample | None:
    for i, (d, c) in enumerate(zip(dfa.states, dfa.classes)):
        if not c.is_valid:
            return SvCounterexample(d, c, i)
    return None


def solve_sv(nfa: Xnfa, max_states: int = DEFAULT_MAX_STATES) -> SvSolutionSpace:
    """Solve ``<d, u> = 1`` over the reachable subset-states of ``nfa``.

    The accept/reject vectors of ``nfa`` are ignored.
    """
    n = nfa.n
    dfa = determinize(nfa, max_states)
    # augmented rows: bit n carries the right-hand side 1
    rows = list(dict.fromkeys(d.bits | (1 << n) for d in dfa.states))
    reduced, _, pivots = row_reduce(rows, n + 1)
    if n in pivots:
        return SvSolutionSpace(n, None, (), False)
    particular = 0
    for k, col in enumerate(pivots):
        if reduced[k] >> n & 1:
            particular |= 1 << col
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = 1 << f
        for k, col in enumerate(pivots):
            if reduced[k] >> f & 1:
                v |= 1 << col
        basis.append(BitVec(n, v))
    return SvSolutionSpace(n, BitVec(n, particular), tuple(basis), True)


def split_assignment(u: BitVec, mask: BitVec) -> SvAssignment:
    """The assignment ``fa = mask``, ``fr = mask xor u``."""
    return SvAssignment(mask, mask ^ u)


def theorem3_free_assignment(nfa: Xnfa, fa: BitVec) -> SvAssignment:
    """Partition ``Q`` into ``fa`` and its complement.

    Valid whenever every symbol's characteristic polynomial is divisible by
    ``X+1`` and ``q0`` has odd size, since then only odd-sized subsets are
    reachable.
    """
    if nfa.q0.popcount() % 2 == 0:
        raise PreconditionError(
            f"initial set {nfa.q0} has even size {nfa.q0.popcount()}; it must be odd"
        )
    for sym, m in zip(nfa.alphabet, nfa.matrices):
        c = char_poly(m)
        if not has_factor_x_plus_1(c):
            raise PreconditionError(
                f"characteristic polynomial {c} of symbol {sym!r} is not divisible by X+1"
            )
    return SvAssignment(fa, fa.complement())
