"""
Conjugating a machine by an invertible matrix
=============================================

A non-singular A over GF(2) turns N into N' with matrices A^-1 M A,
initial vector q0 A and final vectors A^-1 f.  The language is unchanged.
"""

from svxnfa import (
    change_basis,
    check_equivalence,
    determinize,
    equivalent_family,
    gl_order,
    xdfa_isomorphic,
)
from svxnfa.golden import EXAMPLE4_BASIS, example4

nfa = example4()
other = change_basis(nfa, EXAMPLE4_BASIS)
print("q0 :", nfa.q0, "->", other.q0)
print("fa :", nfa.fa, "->", other.fa)
print("fr :", nfa.fr, "->", other.fr)

# the two XDFAs are the same graph with relabelled states
print("isomorphic:", xdfa_isomorphic(determinize(nfa), determinize(other)))
print("equivalent:", check_equivalence(nfa, other))

###############################################################################
# How big is the family?
# ----------------------
# Every element of GL(n,2) except the identity gives a (possibly repeated)
# new machine.

for n in range(1, 7):
    print(n, gl_order(n))

family = equivalent_family(nfa, 10, seed=1)
print(len(family), "verified variants; first q0 values:", [str(m.q0) for m in family[:4]])
