"""Symmetric-difference automata as weighted automata over GF(2).

An :class:`Xnfa` holds one transition matrix per symbol plus the initial,
accept and reject vectors.  :func:`determinize` runs the XOR subset
construction; every resulting state is classified by the parities of its
accept and reject members.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DimensionError, PreconditionError, StateLimitError, SvViolationError
from .gf2 import BitMatrix, BitVec, is_nonsingular, mat_product, parity, vec_mat_mul

DEFAULT_MAX_STATES = 1 << 20
ORACLE_MAX_STATES = 8
ORACLE_MAX_WORD = 16


class Verdict(enum.Enum):
    """Outcome of parity acceptance on a subset-state or a word."""

    ACCEPT = "accept"
    REJECT = "reject"
    BOTH_ODD = "both_odd"
    NEITHER_ODD = "neither_odd"

    @property
    def is_valid(self) -> bool:
        return self in (Verdict.ACCEPT, Verdict.REJECT)

    @classmethod
    def from_parities(cls, a: int, r: int) -> Verdict:
        if a and not r:
            return cls.ACCEPT
        if r and not a:
            return cls.REJECT
        return cls.BOTH_ODD if a else cls.NEITHER_ODD


Word = Sequence[str]


@dataclass(frozen=True)
class Xnfa:
    """An XNFA with self-verifying accept/reject vectors.

    ``allow_singular`` lifts the non-singularity check on the matrices.  The
    state-count bounds in this package assume non-singular matrices, so
    results on such machines carry no guarantee.
    """

    alphabet: tuple[str, ...]
    matrices: tuple[BitMatrix, ...]
    q0: BitVec
    fa: BitVec
    fr: BitVec
    allow_singular: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "matrices", tuple(self.matrices))
        if not self.alphabet:
            raise PreconditionError("alphabet must be non-empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise PreconditionError(f"alphabet has repeated symbols: {self.alphabet}")
        if len(self.matrices) != len(self.alphabet):
            raise DimensionError(
                f"{len(self.alphabet)} symbols but {len(self.matrices)} matrices"
            )
        n = self.q0.n
        for name, v in (("fa", self.fa), ("fr", self.fr)):
            if v.n != n:
                raise DimensionError(f"{name} has length {v.n}, expected {n}")
        for sym, m in zip(self.alphabet, self.matrices):
            if m.n != n:
                raise DimensionError(f"matrix for {sym!r} is {m.n}x{m.n}, expected {n}x{n}")
            if not self.allow_singular and not is_nonsingular(m):
                raise PreconditionError(
                    f"matrix for {sym!r} is singular; pass allow_singular=True to accept it"
                )
        if self.q0.is_zero():
            raise PreconditionError("initial vector must be non-zero")

    @property
    def n(self) -> int:
        return self.q0.n

    def matrix(self, symbol: str) -> BitMatrix:
        try:
            return self.matrices[self.alphabet.index(symbol)]
        except ValueError:
            raise KeyError(f"symbol {symbol!r} not in alphabet {self.alphabet}") from None

    def with_finals(self, fa: BitVec, fr: BitVec) -> Xnfa:
        return Xnfa(self.alphabet, self.matrices, self.q0, fa, fr, self.allow_singular)

    def restrict(self, symbols: Iterable[str]) -> Xnfa:
        """Sub-machine on a subset of the alphabet (e.g. the unary ``a``-part)."""
        symbols = tuple(symbols)
        return Xnfa(
            symbols,
            tuple(self.matrix(s) for s in symbols),
            self.q0,
            self.fa,
            self.fr,
            self.allow_singular,
        )


def classify_state(d: BitVec, fa: BitVec, fr: BitVec) -> Verdict:
    return Verdict.from_parities(d.dot(fa), d.dot(fr))


@dataclass(frozen=True)
class Xdfa:
    """Complete deterministic automaton from the XOR subset construction.

    ``trans[i][k]`` is the index of the successor of ``states[i]`` on
    ``alphabet[k]``; ``states[0]`` is the initial state.
    """

    alphabet: tuple[str, ...]
    states: tuple[BitVec, ...]
    trans: tuple[tuple[int, ...], ...]
    classes: tuple[Verdict, ...]
    fa: BitVec | None = None
    fr: BitVec | None = None
    index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.trans) != len(self.states) or len(self.classes) != len(self.states):
            raise DimensionError("states, trans and classes must have equal length")
        if self.index is None:
            object.__setattr__(self, "index", {s: i for i, s in enumerate(self.states)})

    def __len__(self) -> int:
        return len(self.states)

    @property
    def n(self) -> int:
        return self.states[0].n

    def step(self, i: int, symbol: str) -> int:
        return self.trans[i][self.alphabet.index(symbol)]

    def run(self, word: Word, start: int = 0) -> int:
        i = start
        for sym in word:
            i = self.step(i, sym)
        return i

    def classify_word(self, word: Word) -> Verdict:
        return self.classes[self.run(word)]

    def successor(self, d: BitVec, symbol: str) -> BitVec:
        return self.states[self.step(self.index[d], symbol)]


def determinize(nfa: Xnfa, max_states: int = DEFAULT_MAX_STATES) -> Xdfa:
    """Breadth-first XOR subset construction from ``q0``.

    Symbols are explored in alphabet order, so state numbering is stable.

    Raises:
        StateLimitError: more than ``max_states`` subset-states are reachable.
    """
    n = nfa.n
    rows = [m.rows for m in nfa.matrices]
    start = nfa.q0.bits
    index = {start: 0}
    order = [start]
    trans: list[tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        d = queue.popleft()
        succ = []
        for mrows in rows:
            e = 0
            bits, i = d, 0
            while bits:
                if bits & 1:
                    e ^= mrows[i]
                bits >>= 1
                i += 1
            j = index.get(e)
            if j is None:
                if len(order) >= max_states:
                    raise StateLimitError(
                        f"subset construction exceeded {max_states} states"
                    )
                j = index[e] = len(order)
                order.append(e)
                queue.append(e)
            succ.append(j)
        trans.append(tuple(succ))
    if not nfa.allow_singular:
        assert 0 not in index, "non-singular machine reached the empty subset"
    fa, fr = nfa.fa.bits, nfa.fr.bits
    classes = tuple(Verdict.from_parities(parity(d & fa), parity(d & fr)) for d in order)
    states = tuple(BitVec(n, d) for d in order)
    return Xdfa(nfa.alphabet, states, tuple(trans), classes, nfa.fa, nfa.fr)


def word_matrix(nfa: Xnfa, word: Word) -> BitMatrix:
    """``M_w``, the product of the symbol matrices in reading order."""
    return mat_product((nfa.matrix(s) for s in word), nfa.n)


def reached(nfa: Xnfa, word: Word) -> BitVec:
    """``q0 . M_w``, computed one symbol at a time."""
    v = nfa.q0
    for s in word:
        v = vec_mat_mul(v, nfa.matrix(s))
    return v


def weight(nfa: Xnfa, word: Word, final: BitVec) -> int:
    """``q0 . M_w . final^T`` over GF(2)."""
    return vec_mat_mul(nfa.q0, word_matrix(nfa, word)).dot(final)


def classify_word(nfa: Xnfa, word: Word) -> Verdict:
    v = reached(nfa, word)
    return Verdict.from_parities(v.dot(nfa.fa), v.dot(nfa.fr))


def path_parity_oracle(nfa: Xnfa, word: Word, final: BitVec) -> int:
    """Parity of the number of individual paths that read ``word`` into ``final``.

    Paths are enumerated one at a time by depth-first search, with no
    set-level or matrix arithmetic, so this is exponential and capped.
    """
    n, k = nfa.n, len(word)
    if n > ORACLE_MAX_STATES or k > ORACLE_MAX_WORD:
        raise PreconditionError(
            f"oracle limited to n <= {ORACLE_MAX_STATES} and |w| <= {ORACLE_MAX_WORD}"
        )
    if final.n != n:
        raise DimensionError(f"final vector has length {final.n}, expected {n}")
    tables = {s: nfa.matrix(s).to_lists() for s in set(word)}
    succ = [
        [[j for j in range(n) if tables[s][q][j]] for q in range(n)] for s in word
    ]
    targets = set(final.states())
    count = 0
    stack = [(q, 0) for q in nfa.q0.states()]
    while stack:
        q, depth = stack.pop()
        if depth == k:
            count += q in targets
            continue
        stack.extend((p, depth + 1) for p in succ[depth][q])
    return count % 2


def minimize(dfa: Xdfa) -> Xdfa:
    """Moore partition refinement starting from {accepting, rejecting}.

    The quotient keeps the first (BFS-order) member of each block as its
    representative subset-state and numbers blocks in BFS order from the
    initial block.

    Raises:
        SvViolationError: some state is neither purely accepting nor rejecting.
    """
    for i, c in enumerate(dfa.classes):
        if not c.is_valid:
            raise SvViolationError(
                f"state {dfa.states[i]} is {c.value}; minimization needs a self-verifying XDFA",
                dfa.states[i],
                c,
            )
    block = [0 if c is Verdict.ACCEPT else 1 for c in dfa.classes]
    count = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        new_block = []
        for i, row in enumerate(dfa.trans):
            sig = (block[i],) + tuple(block[j] for j in row)
            new_block.append(sigs.setdefault(sig, len(sigs)))
        block = new_block
        if len(sigs) == count:
            break
        count = len(sigs)

    # renumber blocks by BFS from the initial block
    k = len(dfa.alphabet)
    rep: dict[int, int] = {block[0]: 0}
    reps = [0]
    queue = deque([0])
    trans = []
    while queue:
        i = queue.popleft()
        row = []
        for s in range(k):
            j = dfa.trans[i][s]
            b = block[j]
            if b not in rep:
                rep[b] = len(reps)
                reps.append(j)
                queue.append(j)
            row.append(rep[b])
        trans.append(tuple(row))
    return Xdfa(
        dfa.alphabet,
        tuple(dfa.states[i] for i in reps),
        tuple(trans),
        tuple(dfa.classes[i] for i in reps),
        dfa.fa,
        dfa.fr,
    )


def canonical_form(dfa: Xdfa) -> tuple:
    """Structure and classification after BFS relabelling from the initial state."""
    label = {0: 0}
    order = [0]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in dfa.trans[i]:
            if j not in label:
                label[j] = len(order)
                order.append(j)
                queue.append(j)
    return tuple(
        (dfa.classes[i].value, tuple(label[j] for j in dfa.trans[i])) for i in order
    )


def xdfa_isomorphic(d1: Xdfa, d2: Xdfa) -> bool:
    if d1.alphabet != d2.alphabet:
        raise PreconditionError(f"alphabet mismatch: {d1.alphabet} vs {d2.alphabet}")
    return canonical_form(d1) == canonical_form(d2)
