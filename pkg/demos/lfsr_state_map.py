"""
Companion matrices as shift registers
=====================================

Reading a state set d as the polynomial f(d) = sum d_i X^i, one step of
the companion matrix of c is multiplication by X modulo c.
"""

from svxnfa import BitVec, Gf2Poly, companion_matrix, poly_mod, state_to_poly, vec_mat_mul
from svxnfa.poly import X, char_poly, is_primitive

c = Gf2Poly.parse("X^4+X^3+X^2+1")
m = companion_matrix(c)
print(m.to_lists())
print("char poly:", char_poly(m))

d = BitVec.unit(4, 0)
for step in range(9):
    print(step, d, state_to_poly(d))
    assert state_to_poly(vec_mat_mul(d, m)) == poly_mod(X * state_to_poly(d), c)
    d = vec_mat_mul(d, m)

# c = (X+1)(X^3+X+1), so the orbit of {q0} has period 7 rather than 15
print(is_primitive(Gf2Poly.parse("X^3+X+1")), is_primitive(c))
