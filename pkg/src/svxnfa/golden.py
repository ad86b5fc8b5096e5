"""Reference machines from the worked examples, built from their polynomials."""

from __future__ import annotations

from .automata import Xnfa
from .gf2 import BitMatrix, BitVec
from .poly import Gf2Poly, companion_matrix

P = Gf2Poly.parse


def example1() -> Xnfa:
    """Binary machine on ``X^4+X^2+X+1`` (a) and ``X^4+X^3+X+1`` (b).

    The worked example fixes no initial or final states; ``q0 = fa = {q_0}``
    and ``fr = {q_1, q_2, q_3}`` are used here.  Both polynomials are
    divisible by ``X+1``, so this partition is self-verifying.
    """
    q0 = BitVec.unit(4, 0)
    return Xnfa(
        ("a", "b"),
        (companion_matrix(P("X^4+X^2+X+1")), companion_matrix(P("X^4+X^3+X+1"))),
        q0,
        q0,
        q0.complement(),
    )


def example3() -> Xnfa:
    """The n=4 witness with ``phi = X^3+X+1``."""
    q0 = BitVec.unit(4, 0)
    return Xnfa(
        ("a", "b"),
        (companion_matrix(P("X^4+X^3+X^2+1")), companion_matrix(P("X^4+X^3+X+1"))),
        q0,
        q0,
        BitVec.from_states(4, [1, 2, 3]),
    )


def example4() -> Xnfa:
    """Ternary machine used to illustrate change of basis."""
    return Xnfa(
        ("a", "b", "c"),
        (
            companion_matrix(P("X^4+X^3+X^2+1")),
            companion_matrix(P("X^4+X^3+X+1")),
            companion_matrix(P("X^4+X^2+X+1")),
        ),
        BitVec.unit(4, 0),
        BitVec.from_states(4, [0, 2]),
        BitVec.from_states(4, [1, 3]),
    )


EXAMPLE4_BASIS = BitMatrix.from_lists(
    [
        [0, 1, 1, 1],
        [1, 0, 1, 0],
        [1, 1, 0, 0],
        [0, 1, 0, 1],
    ]
)

# (source states, symbol, target states) as listed for the first example
TABLE1 = (
    ((0,), "a", (1,)),
    ((3,), "a", (0, 1, 2)),
    ((0, 2, 3), "a", (0, 2, 3)),
    ((1,), "b", (2,)),
    ((0, 1, 3), "b", (0, 2, 3)),
    ((1, 2, 3), "b", (0, 1, 2)),
)

GOLDEN = {"example1": example1, "example3": example3, "example4": example4}
