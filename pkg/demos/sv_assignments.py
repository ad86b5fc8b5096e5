"""
Choosing accept and reject states
=================================

The self-verifying condition asks that every reachable subset-state meets
exactly one of fa, fr in an odd number of states.  Writing u = fa xor fr,
this is a linear system <d, u> = 1 over the reachable d.
"""

from svxnfa import BitVec, check_sv, solve_sv, split_assignment
from svxnfa.golden import example1, example3

nfa = example3()
print("SV:", check_sv(nfa))

space = solve_sv(nfa)
print("satisfiable:", space.satisfiable, "particular:", space.particular, "dim:", len(space.homogeneous_basis))

# any mask splits u into an (fa, fr) pair; overlapping states count for both
u = space.particular
for mask in (0b0000, 0b0001, 0b0110):
    a = split_assignment(u, BitVec(4, mask))
    print(a.fa, a.fr, "trivial" if a.trivial else "non-trivial", "ok" if check_sv(nfa.with_finals(a.fa, a.fr)) is None else "bad")

###############################################################################
# A bad partition
# ---------------

q = BitVec.unit(4, 0)
cex = check_sv(nfa.with_finals(q, q))
print("counterexample:", cex.state, cex.verdict.value)

print("example 1 solution space:", list(solve_sv(example1())))
