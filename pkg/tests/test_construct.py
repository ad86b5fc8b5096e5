import random

import pytest

from svxnfa.automata import Verdict, classify_word, determinize, minimize, weight, xdfa_isomorphic
from svxnfa.construct import (
    N2_BOUNDARY_NOTE,
    build_mary_witness,
    build_witness,
    change_basis,
    check_equivalence,
    equivalent_family,
    witness_spec,
    witness_xdfa_size,
    xnfa_canonical_key,
)
from svxnfa.errors import PreconditionError, SingularMatrixError, SvViolationError
from svxnfa.gf2 import BitMatrix, BitVec, enumerate_gl, random_gl, vec_mat_mul
from svxnfa.golden import EXAMPLE4_BASIS
from svxnfa.poly import X, X_PLUS_1, Gf2Poly, has_factor_x_plus_1, is_primitive, poly_to_state
from svxnfa.sampling import all_words
from svxnfa.sv import check_sv

P = Gf2Poly.parse
S = BitVec.from_states


class TestWitness:
    def test_example3_matrices(self):
        nfa = build_witness(4, P("X^3+X+1"))
        assert nfa.matrix("a").row(3).to_list() == [1, 0, 1, 1]
        assert nfa.matrix("b").row(3).to_list() == [1, 1, 0, 1]
        assert nfa.q0 == nfa.fa == S(4, [0]) and nfa.fr == S(4, [1, 2, 3])

    def test_default_phi_reproduces_example3(self, ex3):
        assert build_witness(4) == ex3

    @pytest.mark.parametrize("n", range(3, 10))
    def test_spec_invariants(self, n):
        spec = witness_spec(n)
        assert is_primitive(spec.phi)
        assert spec.c_a.degree == spec.c_b.degree == n
        assert has_factor_x_plus_1(spec.c_a) and has_factor_x_plus_1(spec.c_b)
        assert spec.note is None

    def test_n2_boundary(self):
        spec = witness_spec(2)
        assert spec.phi == X and spec.note == N2_BOUNDARY_NOTE
        nfa = build_witness(2)
        assert nfa.allow_singular
        assert witness_xdfa_size(2) == 2

    def test_n2_primitive_choice_gives_three_states(self):
        nfa = build_witness(2, X_PLUS_1)
        assert not nfa.allow_singular
        assert len(determinize(nfa)) == 3

    def test_n5_pipeline(self):
        nfa = build_witness(5)
        assert check_sv(nfa) is None
        assert len(determinize(nfa)) == 16

    @pytest.mark.parametrize("n,size", [(2, 2), (4, 8), (8, 128)])
    def test_sizes(self, n, size):
        assert witness_xdfa_size(n) == size

    def test_invalid(self):
        with pytest.raises(PreconditionError):
            build_witness(1)
        with pytest.raises(PreconditionError, match="primitive"):
            build_witness(5, P("X^4+X^3+X^2+X+1"))
        with pytest.raises(PreconditionError, match="degree"):
            build_witness(5, P("X^3+X+1"))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_fixed_point_and_b_entry(self, n):
        nfa = build_witness(n)
        d_phi = poly_to_state(witness_spec(n).phi, n)
        assert vec_mat_mul(d_phi, nfa.matrix("a")) == d_phi
        assert vec_mat_mul(BitVec.unit(n, n - 1), nfa.matrix("b")) == d_phi

    @pytest.mark.parametrize("n", range(3, 9))
    def test_unary_cycle(self, n):
        nfa = build_witness(n)
        cycle = determinize(nfa.restrict("a"))
        assert len(cycle) == 2 ** (n - 1) - 1
        assert poly_to_state(witness_spec(n).phi, n) not in cycle.index

    @pytest.mark.parametrize("n", range(3, 8))
    def test_membership_law(self, n):
        nfa = build_witness(n)
        period = 2 ** (n - 1) - 1
        accepted = {j for j in range(period) if classify_word(nfa, "a" * j) is Verdict.ACCEPT}
        assert {0, n % period} <= accepted
        assert not accepted & set(range(1, n))
        for j in range(3 * period):
            assert (classify_word(nfa, "a" * j) is Verdict.ACCEPT) == (j % period in accepted)

    def test_example3_membership(self, ex3):
        assert {j for j in range(7) if classify_word(ex3, "a" * j) is Verdict.ACCEPT} == {0, 4, 5}

    @pytest.mark.parametrize("n", range(3, 8))
    def test_b_n_then_a_star(self, n):
        nfa = build_witness(n)
        assert all(classify_word(nfa, "b" * n + "a" * k) is Verdict.ACCEPT for k in range(21))


class TestMary:
    def test_binary_is_plain_witness(self):
        assert build_mary_witness(4, 2) == build_witness(4)

    def test_three_symbols(self):
        nfa = build_mary_witness(4, 3)
        assert nfa.alphabet == ("a", "b", "c")
        assert len(determinize(nfa)) == 8

    def test_four_symbols_minimal(self):
        nfa = build_mary_witness(5, 4)
        assert len(minimize(determinize(nfa))) == 16

    def test_m_below_two(self):
        with pytest.raises(PreconditionError):
            build_mary_witness(4, 1)


class TestChangeBasis:
    def test_identity(self, ex4):
        assert change_basis(ex4, BitMatrix.identity(4)) == ex4

    def test_example4(self, ex4):
        other = change_basis(ex4, EXAMPLE4_BASIS)
        assert other.q0 == S(4, [1, 2, 3])
        assert other.fa == S(4, [0, 2])
        assert other.fr == S(4, [2, 3])

    def test_example4_reject_state(self, ex4):
        # {q0,q1,q2} holds two accept states and one reject state in N'
        other = change_basis(ex4, EXAMPLE4_BASIS)
        dfa = determinize(other)
        d = S(4, [0, 1, 2])
        assert d in dfa.index
        assert dfa.classes[dfa.index[d]] is Verdict.REJECT

    def test_singular(self, ex4):
        with pytest.raises(SingularMatrixError):
            change_basis(ex4, BitMatrix.zeros(4))

    def test_size_mismatch(self, ex4):
        with pytest.raises(PreconditionError):
            change_basis(ex4, BitMatrix.identity(3))

    def test_weights_preserved(self):
        rng = random.Random(2)
        for n in range(2, 7):
            nfa = build_witness(n)
            for _ in range(20):
                other = change_basis(nfa, random_gl(n, rng))
                for w in all_words(nfa.alphabet, 5):
                    assert weight(other, w, other.fa) == weight(nfa, w, nfa.fa)
                    assert weight(other, w, other.fr) == weight(nfa, w, nfa.fr)


class TestFamily:
    def test_single_member(self, ex3):
        (member,) = equivalent_family(ex3, 1, seed=4)
        assert member != ex3
        assert xdfa_isomorphic(determinize(member), determinize(ex3))

    def test_all_of_gl2(self):
        nfa = build_witness(2)
        members = equivalent_family(nfa, 5)
        assert len(members) == 5 == len(set(members))
        assert all(check_equivalence(nfa, m) for m in members)

    def test_too_many(self):
        with pytest.raises(PreconditionError):
            equivalent_family(build_witness(2), 6)

    def test_members_agree_on_words(self, ex4):
        for member in equivalent_family(ex4, 8, seed=1):
            assert check_sv(member) is None
            for w in all_words(ex4.alphabet, 6):
                assert classify_word(member, w) is classify_word(ex4, w)

    def test_random_mode_distinct(self):
        members = equivalent_family(build_witness(6), 10, seed=3)
        assert len(set(members)) == 10

    def test_seeded_reproducible(self, ex3):
        assert equivalent_family(ex3, 4, seed=9) == equivalent_family(ex3, 4, seed=9)

    def test_dedupe_isomorphic(self):
        nfa = build_witness(3)
        full = equivalent_family(nfa, 167)
        deduped = equivalent_family(nfa, 167, dedupe_isomorphic=True)
        keys = {xnfa_canonical_key(m) for m in full}
        assert len(deduped) == len(keys) <= 167

    def test_canonical_key_is_permutation_invariant(self, ex3):
        swap = BitMatrix.from_lists([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        assert xnfa_canonical_key(change_basis(ex3, swap)) == xnfa_canonical_key(ex3)


class TestEquivalence:
    @pytest.mark.parametrize("n", range(2, 7))
    def test_basis_change(self, n):
        rng = random.Random(n)
        nfa = build_witness(n)
        for _ in range(20):
            assert check_equivalence(nfa, change_basis(nfa, random_gl(n, rng)))

    def test_different_witnesses(self):
        assert not check_equivalence(build_witness(4), build_witness(5))

    def test_self(self, ex4):
        assert check_equivalence(ex4, ex4)

    def test_swapped_finals_differ(self, ex3):
        assert not check_equivalence(ex3, ex3.with_finals(ex3.fr, ex3.fa))

    def test_invalid_machine(self, ex3):
        q = S(4, [0])
        with pytest.raises(SvViolationError):
            check_equivalence(ex3, ex3.with_finals(q, q))
