"""Command-line front end.

Exit codes: 0 success (and ``accept`` for classify), 1 ``reject`` for
classify or a failing reproduction row, 2 bad arguments, 3 construction
error, 4 state cap exceeded, 5 unreadable document, 6 SV condition
violated, 7 a transformed machine failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .automata import (
    DEFAULT_MAX_STATES,
    Verdict,
    Xdfa,
    Xnfa,
    classify_word,
    determinize,
    minimize,
    path_parity_oracle,
    weight,
)
from .construct import (
    build_mary_witness,
    change_basis,
    check_equivalence,
    equivalent_family,
    witness_spec,
)
from .errors import PreconditionError, StateLimitError, SvViolationError, SvxnfaError
from .gf2 import BitVec, gl_order, random_gl
from .poly import Gf2Poly
from .reproduce import SUITES, format_tsv
from .sampling import all_words
from .sv import check_sv, solve_sv, split_assignment

EXIT_REJECT = 1
EXIT_USAGE = 2
EXIT_CONSTRUCT = 3
EXIT_STATE_CAP = 4
EXIT_PARSE = 5
EXIT_SV = 6
EXIT_VERIFY = 7


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_xnfa(path: str | None) -> Xnfa:
    if not path:
        raise CliError("--in is required", EXIT_USAGE)
    obj = io.load(path)
    if not isinstance(obj, Xnfa):
        raise CliError(f"{path} holds an xdfa document; an xnfa is required", EXIT_PARSE)
    return obj


def _split_word(text: str, alphabet: Sequence[str]) -> list[str]:
    if any(sep in text for sep in ", "):
        word = [s for s in text.replace(",", " ").split() if s]
    elif all(len(s) == 1 for s in alphabet):
        word = list(text)
    else:
        word = [text] if text else []
    unknown = sorted(set(word) - set(alphabet))
    if unknown:
        raise CliError(f"symbols {unknown} not in alphabet {list(alphabet)}", EXIT_USAGE)
    return word


def cmd_witness(args) -> int:
    try:
        phi = Gf2Poly.parse(args.phi) if args.phi else None
        spec = witness_spec(args.n, phi)
        nfa = build_mary_witness(args.n, args.alphabet_size, phi)
    except (PreconditionError, ValueError) as exc:
        raise CliError(str(exc), EXIT_CONSTRUCT) from exc
    dfa = determinize(nfa, args.max_states)
    sv = check_sv(nfa, args.max_states)
    _err(
        f"n={args.n} symbols={len(nfa.alphabet)} phi={spec.phi} c_a={spec.c_a} "
        f"c_b={spec.c_b} xdfa_states={len(dfa)} expected={2 ** (args.n - 1)} "
        f"SV: {'ok' if sv is None else 'violated'}"
    )
    if spec.note:
        _err(f"note: {spec.note}")
    _emit(io.xnfa_to_dot(nfa) if args.dot else io.dumps(nfa), args.out)
    return 0


def cmd_determinize(args) -> int:
    nfa = _load_xnfa(args.input)
    dfa = determinize(nfa, args.max_states)
    _err(f"xdfa states: {len(dfa)}")
    if args.dot:
        if args.out:
            _emit(io.dumps(dfa), args.out)
        sys.stdout.write(io.xdfa_to_dot(dfa))
    else:
        _emit(io.dumps(dfa), args.out)
    return 0


def cmd_minimize(args) -> int:
    obj = io.load(args.input) if args.input else None
    if obj is None:
        raise CliError("--in is required", EXIT_USAGE)
    dfa = obj if isinstance(obj, Xdfa) else determinize(obj, args.max_states)
    try:
        small = minimize(dfa)
    except SvViolationError as exc:
        raise CliError(str(exc), EXIT_SV) from exc
    _err(f"xdfa states: {len(dfa)} -> minimal: {len(small)}")
    _emit(io.xdfa_to_dot(small) if args.dot else io.dumps(small), args.out)
    return 0


def cmd_check_sv(args) -> int:
    nfa = _load_xnfa(args.input)
    cex = check_sv(nfa, args.max_states)
    if cex is None:
        print("SV: ok")
        return 0
    print(f"SV: violated at state {cex.state} (d{cex.index}): {cex.verdict.value}")
    return EXIT_SV


def cmd_solve_sv(args) -> int:
    nfa = _load_xnfa(args.input)
    space = solve_sv(nfa, args.max_states)
    if not space.satisfiable:
        print("satisfiable: false")
        return 0
    print("satisfiable: true")
    print(f"particular: {space.particular.to_list()}")
    print(f"basis size: {len(space.homogeneous_basis)}")
    for b in space.homogeneous_basis:
        print(f"basis: {b.to_list()}")
    if args.enumerate:
        shown = 0
        for u in space:
            for mask in range(1 << nfa.n):
                if shown >= args.enumerate:
                    break
                a = split_assignment(u, BitVec(nfa.n, mask))
                label = "trivial" if a.trivial else "non-trivial"
                print(f"split: u={u.to_list()} fa={a.fa.to_list()} fr={a.fr.to_list()} {label}")
                shown += 1
            if shown >= args.enumerate:
                break
    return 0


def _verify(base: Xnfa, other: Xnfa, base_sv: bool) -> None:
    if base_sv:
        if check_sv(other) is not None:
            raise CliError("transformed machine violates the SV condition", EXIT_VERIFY)
        if not check_equivalence(base, other):
            raise CliError("transformed machine is not equivalent", EXIT_VERIFY)


def cmd_change_basis(args) -> int:
    nfa = _load_xnfa(args.input)
    base_sv = check_sv(nfa, args.max_states) is None
    if not base_sv:
        _err("warning: input is not self-verifying; equivalence is checked by weights only")
    chosen = [args.matrix is not None, args.random is not None, args.family is not None]
    if sum(chosen) != 1:
        raise CliError("give exactly one of --matrix, --random, --family", EXIT_USAGE)
    try:
        if args.family is not None:
            members = equivalent_family(nfa, args.family, args.seed)
        else:
            a = io.load_matrix(args.matrix) if args.matrix else random_gl(nfa.n, args.random)
            members = [change_basis(nfa, a)]
    except PreconditionError as exc:
        raise CliError(str(exc), EXIT_CONSTRUCT) from exc
    except SvxnfaError as exc:
        if isinstance(exc, io.DocumentError):
            raise
        raise CliError(str(exc), EXIT_VERIFY) from exc
    for m in members:
        _verify(nfa, m, base_sv)
    if args.family is not None:
        _emit(json.dumps([io.to_dict(m) for m in members], indent=2) + "\n", args.out)
        _err(f"{len(members)} verified machines")
    else:
        _emit(io.dumps(members[0]), args.out)
    return 0


def cmd_classify(args) -> int:
    nfa = _load_xnfa(args.input)
    v = classify_word(nfa, _split_word(args.word, nfa.alphabet))
    print(v.value)
    return {Verdict.ACCEPT: 0, Verdict.REJECT: EXIT_REJECT}.get(v, EXIT_SV)


def cmd_gl_order(args) -> int:
    if args.n < 1:
        raise CliError("n must be >= 1", EXIT_USAGE)
    print(gl_order(args.n))
    return 0


def cmd_oracle_verify(args) -> int:
    nfa = _load_xnfa(args.input)
    checked = 0
    for w in all_words(nfa.alphabet, args.max_length):
        for name, f in (("fa", nfa.fa), ("fr", nfa.fr)):
            if path_parity_oracle(nfa, w, f) != weight(nfa, w, f):
                raise CliError(f"mismatch on word {''.join(w)!r} for {name}", EXIT_VERIFY)
            checked += 1
    print(f"oracle agrees on {checked} (word, final) pairs")
    return 0


def cmd_reproduce(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        rows = SUITES[name]()
        sys.stdout.write(format_tsv(name, rows))
        failed += sum(not r.ok for r in rows)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", metavar="PATH", help="input document")
    common.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="dot", action="store_false", help="JSON output (default)")
    fmt.add_argument("--dot", dest="dot", action="store_true", help="Graphviz DOT output")
    common.set_defaults(dot=False)

    parser = argparse.ArgumentParser(prog="svxnfa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witness", parents=[common], help="build the 2^(n-1) witness machine")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet-size", "-m", type=int, default=2)
    p.add_argument("--phi", help='primitive polynomial of degree n-1, e.g. "X^3+X+1"')
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("determinize", parents=[common], help="XOR subset construction")
    p.set_defaults(func=cmd_determinize)

    p = sub.add_parser("minimize", parents=[common], help="minimal XDFA")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("check-sv", parents=[common], help="verify the SV condition")
    p.set_defaults(func=cmd_check_sv)

    p = sub.add_parser("solve-sv", parents=[common], help="all SV-assignments")
    p.add_argument("--enumerate", type=int, default=0, metavar="K")
    p.set_defaults(func=cmd_solve_sv)

    p = sub.add_parser("change-basis", parents=[common], help="conjugate by a non-singular matrix")
    p.add_argument("--matrix", metavar="PATH")
    p.add_argument("--random", type=int, metavar="SEED")
    p.add_argument("--family", type=int, metavar="COUNT")
    p.set_defaults(func=cmd_change_basis)

    p = sub.add_parser("classify", parents=[common], help="accept or reject a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gl-order", parents=[common], help="|GL(n, 2)|")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gl_order)

    p = sub.add_parser("oracle-verify", parents=[common], help="path-count oracle vs weights")
    p.add_argument("--max-length", type=int, default=6)
    p.set_defaults(func=cmd_oracle_verify)

    p = sub.add_parser("reproduce", parents=[common], help="run a reproduction suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _err(f"error: {exc}")
        return exc.code
    except io.DocumentError as exc:
        _err(f"error: {exc}")
        return EXIT_PARSE
    except StateLimitError as exc:
        _err(f"error: {exc}")
        return EXIT_STATE_CAP
    except KeyError as exc:
        _err(f"error: {exc.args[0]}")
        return EXIT_USAGE
    except SvxnfaError as exc:
        _err(f"error: {exc}")
        return EXIT_CONSTRUCT


if __name__ == "__main__":
    sys.exit(main())
