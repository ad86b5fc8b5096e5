"""
How many subset-states does the witness machine reach?
=======================================================

For each n we build the binary witness, run the XOR subset construction
and minimize.  The count should be 2^(n-1) every time.
"""

from svxnfa import build_witness, determinize, minimize, witness_spec

print(f"{'n':>3} {'phi':>22} {'reached':>8} {'minimal':>8} {'2^(n-1)':>8}")
for n in range(2, 13):
    spec = witness_spec(n)
    dfa = determinize(build_witness(n))
    print(f"{n:>3} {str(spec.phi):>22} {len(dfa):>8} {len(minimize(dfa)):>8} {2 ** (n - 1):>8}")

# every reached state has odd size, so the parity of |d ∩ fa| decides the class
dfa = determinize(build_witness(6))
print("sizes seen at n=6:", sorted({d.popcount() for d in dfa.states}))

###############################################################################
# Only the letter a
# -----------------
# Dropping b leaves a single cycle.  The polynomial phi, read as a state,
# is a fixed point of M_a and never lies on that cycle.

from svxnfa import poly_to_state, vec_mat_mul

for n in (4, 7, 10):
    nfa = build_witness(n)
    d_phi = poly_to_state(witness_spec(n).phi, n)
    cycle = determinize(nfa.restrict("a"))
    print(n, len(cycle), d_phi, vec_mat_mul(d_phi, nfa.matrix("a")) == d_phi, d_phi in cycle.index)

# n=2 is the odd one out: any companion matrix sends {q0} to {q1}, so the
# a-cycle has at least 2 states where 2^(n-1)-1 = 1.
print(witness_spec(2).note)
