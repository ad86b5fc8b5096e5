"""JSON documents and Graphviz DOT rendering for XNFA/XDFA.

Documents store every vector and matrix as explicit 0/1 integer arrays,
matrices row-major with row ``q`` listing the image set of ``q``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .automata import Verdict, Xdfa, Xnfa
from .errors import SvxnfaError
from .gf2 import BitMatrix, BitVec

SCHEMA_VERSION = "1"

Automaton = Union[Xnfa, Xdfa]


class DocumentError(SvxnfaError, ValueError):
    """Malformed or unsupported automaton document."""


def xnfa_to_dict(nfa: Xnfa) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "xnfa",
        "n": nfa.n,
        "alphabet": list(nfa.alphabet),
        "matrices": {s: m.to_lists() for s, m in zip(nfa.alphabet, nfa.matrices)},
        "q0": nfa.q0.to_list(),
        "fa": nfa.fa.to_list(),
        "fr": nfa.fr.to_list(),
        "allow_singular": nfa.allow_singular,
    }


def xdfa_to_dict(dfa: Xdfa) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "xdfa",
        "n": dfa.n,
        "alphabet": list(dfa.alphabet),
        "fa": None if dfa.fa is None else dfa.fa.to_list(),
        "fr": None if dfa.fr is None else dfa.fr.to_list(),
        "states": [d.to_list() for d in dfa.states],
        "transitions": [list(row) for row in dfa.trans],
        "classes": [c.value for c in dfa.classes],
    }


def to_dict(obj: Automaton) -> dict[str, Any]:
    if isinstance(obj, Xnfa):
        return xnfa_to_dict(obj)
    if isinstance(obj, Xdfa):
        return xdfa_to_dict(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _vec(doc: dict, key: str, n: int) -> BitVec:
    v = BitVec.from_list(doc[key])
    if v.n != n:
        raise DocumentError(f"{key!r} has length {v.n}, expected n={n}")
    return v


def from_dict(doc: dict[str, Any]) -> Automaton:
    """Inverse of :func:`to_dict`.

    Raises:
        DocumentError: wrong schema version, unknown kind, missing keys or
            inconsistent shapes.
    """
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {version!r}")
    kind = doc.get("kind")
    try:
        n = int(doc["n"])
        alphabet = tuple(str(s) for s in doc["alphabet"])
        if kind == "xnfa":
            mats = doc["matrices"]
            missing = [s for s in alphabet if s not in mats]
            if missing:
                raise DocumentError(f"no matrix for symbols {missing}")
            matrices = tuple(BitMatrix.from_lists(mats[s]) for s in alphabet)
            return Xnfa(
                alphabet,
                matrices,
                _vec(doc, "q0", n),
                _vec(doc, "fa", n),
                _vec(doc, "fr", n),
                bool(doc.get("allow_singular", False)),
            )
        if kind == "xdfa":
            states = tuple(BitVec.from_list(s) for s in doc["states"])
            trans = tuple(tuple(int(j) for j in row) for row in doc["transitions"])
            classes = tuple(Verdict(c) for c in doc["classes"])
            for row in trans:
                if len(row) != len(alphabet) or not all(0 <= j < len(states) for j in row):
                    raise DocumentError(f"bad transition row {list(row)}")
            fa = None if doc.get("fa") is None else _vec(doc, "fa", n)
            fr = None if doc.get("fr") is None else _vec(doc, "fr", n)
            return Xdfa(alphabet, states, trans, classes, fa, fr)
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"invalid {kind} document: {exc}") from exc
    raise DocumentError(f"unknown kind {kind!r}")


def dumps(obj: Automaton | dict | list) -> str:
    if isinstance(obj, (Xnfa, Xdfa)):
        obj = to_dict(obj)
    return json.dumps(obj, indent=2) + "\n"


def loads(text: str) -> Automaton:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return from_dict(doc)


def load(path: str | Path) -> Automaton:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def save(obj: Automaton, path: str | Path) -> None:
    Path(path).write_text(dumps(obj))


def load_matrix(path: str | Path) -> BitMatrix:
    """Read a basis matrix: either ``[[...], ...]`` or ``{"matrix": [[...], ...]}``."""
    try:
        doc = json.loads(Path(path).read_text())
        rows = doc["matrix"] if isinstance(doc, dict) else doc
        return BitMatrix.from_lists(rows)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"cannot read matrix from {path}: {exc}") from exc


# -- DOT ---------------------------------------------------------------------

_STYLE = {
    (True, False): 'peripheries=2',
    (False, True): 'penwidth=3',
    (True, True): 'peripheries=2, penwidth=3',
    (False, False): '',
}


def _node(name: str, label: str, accept: bool, reject: bool, dashed: bool = False) -> str:
    attrs = [f'label="{label}"']
    if _STYLE[accept, reject]:
        attrs.append(_STYLE[accept, reject])
    if dashed:
        attrs.append("style=dashed")
    return f"  {name} [{', '.join(attrs)}];"


def _edges(pairs: dict[tuple[str, str], list[str]]) -> list[str]:
    return [f'  {a} -> {b} [label="{",".join(syms)}"];' for (a, b), syms in pairs.items()]


def xdfa_to_dot(dfa: Xdfa, name: str = "xdfa") -> str:
    """Nodes ``d0..dk`` in BFS order.

    Accepting states get a double border, rejecting states a thick one;
    states violating the SV condition are dashed.
    """
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=ellipse];",
             '  start [shape=point, label=""];']
    for i, (d, c) in enumerate(zip(dfa.states, dfa.classes)):
        accept = c in (Verdict.ACCEPT, Verdict.BOTH_ODD)
        reject = c in (Verdict.REJECT, Verdict.BOTH_ODD)
        lines.append(_node(f"d{i}", str(d), accept, reject, dashed=not c.is_valid))
    lines.append("  start -> d0;")
    pairs: dict[tuple[str, str], list[str]] = {}
    for i, row in enumerate(dfa.trans):
        for sym, j in zip(dfa.alphabet, row):
            pairs.setdefault((f"d{i}", f"d{j}"), []).append(sym)
    lines += _edges(pairs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def xnfa_to_dot(nfa: Xnfa, name: str = "xnfa") -> str:
    """States ``q0..q{n-1}``; double border for accept, thick for reject, both for both."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for q in range(nfa.n):
        lines.append(_node(f"q{q}", f"q{q}", bool(nfa.fa[q]), bool(nfa.fr[q])))
    for q in nfa.q0.states():
        lines.append(f'  start{q} [shape=point, label=""];')
        lines.append(f"  start{q} -> q{q};")
    pairs: dict[tuple[str, str], list[str]] = {}
    for sym, m in zip(nfa.alphabet, nfa.matrices):
        for q in range(nfa.n):
            for p in m.row(q).states():
                pairs.setdefault((f"q{q}", f"q{p}"), []).append(sym)
    lines += _edges(pairs)
    lines.append("}")
    return "\n".join(lines) + "\n"
