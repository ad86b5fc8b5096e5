"""Named reproduction suites: expected-vs-actual tables for the worked examples and bounds."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .automata import Verdict, classify_word, determinize, minimize, xdfa_isomorphic
from .construct import build_witness, change_basis, check_equivalence, witness_spec
from .golden import EXAMPLE4_BASIS, TABLE1, example1, example3, example4
from .gf2 import BitVec, random_gl, vec_mat_mul
from .poly import X, Gf2Poly, poly_mod, poly_to_state, state_to_poly
from .sampling import all_words
from .sv import check_sv


@dataclass(frozen=True)
class Row:
    check: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _fmt_set(states) -> str:
    return "{" + ",".join(f"q{i}" for i in states) + "}"


def suite_example1() -> list[Row]:
    nfa = example1()
    dfa = determinize(nfa)
    rows = []
    for src, sym, dst in TABLE1:
        d = BitVec.from_states(4, src)
        got = str(dfa.successor(d, sym)) if d in dfa.index else "unreachable"
        rows.append(Row(f"delta({_fmt_set(src)},{sym})", _fmt_set(dst), got))
        c = {"a": "X^4+X^2+X+1", "b": "X^4+X^3+X+1"}[sym]
        poly = poly_mod(X * state_to_poly(d), Gf2Poly.parse(c))
        rows.append(Row(f"X*f({_fmt_set(src)}) mod {c}", _fmt_set(dst), str(poly_to_state(poly, 4))))
    return rows


def suite_example3() -> list[Row]:
    nfa = example3()
    dfa = determinize(nfa)
    rows = [
        Row("reachable states", "8", str(len(dfa))),
        Row("all odd-sized", "True", str(all(d.popcount() % 2 for d in dfa.states))),
        Row("minimal states", "8", str(len(minimize(dfa)))),
        Row("SV condition", "ok", "ok" if check_sv(nfa) is None else "violated"),
    ]
    accepted = sorted({j % 7 for j in range(71) if classify_word(nfa, "a" * j) is Verdict.ACCEPT})
    rows.append(Row("a^j accepted, j mod 7 in", "[0, 4, 5]", str(accepted)))
    rejected = sorted({j % 7 for j in range(71) if classify_word(nfa, "a" * j) is Verdict.REJECT})
    rows.append(Row("a^j rejected, j mod 7 in", "[1, 2, 3, 6]", str(rejected)))
    l2 = all(classify_word(nfa, "bbbb" + "a" * k) is Verdict.ACCEPT for k in range(21))
    rows.append(Row("bbbb a^k accepted, k<=20", "True", str(l2)))
    return rows


def suite_example4() -> list[Row]:
    nfa = example4()
    other = change_basis(nfa, EXAMPLE4_BASIS)
    return [
        Row("Q'_0", "{q1,q2,q3}", str(other.q0)),
        Row("F'^a", "{q0,q2}", str(other.fa)),
        Row("F'^r", "{q2,q3}", str(other.fr)),
        Row("SV(N)", "ok", "ok" if check_sv(nfa) is None else "violated"),
        Row("SV(N')", "ok", "ok" if check_sv(other) is None else "violated"),
        Row("XDFA isomorphic", "True", str(xdfa_isomorphic(determinize(nfa), determinize(other)))),
        Row("languages equal", "True", str(check_equivalence(nfa, other))),
    ]


def suite_bounds(max_n: int = 12) -> list[Row]:
    rows = []
    for n in range(2, max_n + 1):
        dfa = determinize(build_witness(n))
        odd = all(d.popcount() % 2 for d in dfa.states)
        rows.append(Row(f"n={n} reachable", str(2 ** (n - 1)), str(len(dfa))))
        rows.append(Row(f"n={n} odd-sized", "True", str(odd)))
        rows.append(Row(f"n={n} minimal", str(2 ** (n - 1)), str(len(minimize(dfa)))))
    return rows


def suite_unary(max_n: int = 12) -> list[Row]:
    rows = []
    for n in range(2, max_n + 1):
        nfa = build_witness(n)
        d_phi = poly_to_state(witness_spec(n).phi, n)
        cycle = determinize(nfa.restrict("a"))
        rows.append(Row(f"n={n} a-only states", str(2 ** (n - 1) - 1), str(len(cycle))))
        rows.append(Row(f"n={n} d_phi excluded", "True", str(d_phi not in cycle.index)))
        fixed = vec_mat_mul(d_phi, nfa.matrix("a")) == d_phi
        rows.append(Row(f"n={n} d_phi fixed by a", "True", str(fixed)))
    return rows


def suite_basis(per_n: int = 100, seed: int = 0, max_len: int = 6) -> list[Row]:
    rng = random.Random(seed)
    rows = []
    for n in range(2, 7):
        nfa = build_witness(n)
        words = list(all_words(nfa.alphabet, max_len))
        base = [classify_word(nfa, w) for w in words]
        agree = equal = 0
        for _ in range(per_n):
            other = change_basis(nfa, random_gl(n, rng))
            agree += all(classify_word(other, w) is v for w, v in zip(words, base))
            equal += check_equivalence(nfa, other)
        rows.append(Row(f"n={n} words agree", str(per_n), str(agree)))
        rows.append(Row(f"n={n} equivalent", str(per_n), str(equal)))
    return rows


SUITES: dict[str, Callable[[], list[Row]]] = {
    "example1": suite_example1,
    "example3": suite_example3,
    "example4": suite_example4,
    "bounds": suite_bounds,
    "unary": suite_unary,
    "basis": suite_basis,
}


def format_tsv(suite: str, rows: list[Row]) -> str:
    lines = ["suite\tcheck\texpected\tactual\tstatus"]
    for r in rows:
        lines.append(f"{suite}\t{r.check}\t{r.expected}\t{r.actual}\t{'PASS' if r.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"

