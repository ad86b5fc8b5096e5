import random

import pytest

from svxnfa.automata import (
    Verdict,
    Xdfa,
    Xnfa,
    classify_word,
    determinize,
    minimize,
    path_parity_oracle,
    reached,
    weight,
    word_matrix,
    xdfa_isomorphic,
)
from svxnfa.construct import build_witness, has_odd_hypothesis
from svxnfa.errors import PreconditionError, StateLimitError, SvViolationError
from svxnfa.gf2 import BitMatrix, BitVec, mat_mul, random_gl, vec_mat_mul
from svxnfa.golden import TABLE1, example1, example3, example4
from svxnfa.poly import companion_matrix
from svxnfa.sampling import all_words, random_odd_machine, random_xnfa

S = BitVec.from_states


def unary_identity(n=3):
    q0 = S(n, [0, 2])
    return Xnfa(("a",), (BitMatrix.identity(n),), q0, q0, BitVec.zeros(n))


class TestXnfa:
    def test_rejects_singular_by_default(self):
        m = BitMatrix.from_lists([[1, 1], [1, 1]])
        q0 = BitVec.unit(2, 0)
        with pytest.raises(PreconditionError, match="singular"):
            Xnfa(("a",), (m,), q0, q0, q0)
        assert Xnfa(("a",), (m,), q0, q0, q0, allow_singular=True).allow_singular

    def test_rejects_empty_initial(self):
        with pytest.raises(PreconditionError):
            Xnfa(("a",), (BitMatrix.identity(2),), BitVec.zeros(2), BitVec.zeros(2), BitVec.zeros(2))

    def test_overlap_allowed(self):
        nfa = example4()
        q = S(4, [2])
        assert nfa.with_finals(q, q).fa == q

    def test_duplicate_symbols(self):
        q0 = BitVec.unit(1, 0)
        with pytest.raises(PreconditionError):
            Xnfa(("a", "a"), (BitMatrix.identity(1),) * 2, q0, q0, q0)


class TestDeterminize:
    @pytest.mark.parametrize("src,sym,dst", TABLE1)
    def test_table1(self, ex1, src, sym, dst):
        dfa = determinize(ex1)
        assert dfa.successor(S(4, src), sym) == S(4, dst)

    def test_identity_machine(self):
        dfa = determinize(unary_identity())
        assert len(dfa) == 1 and dfa.trans == ((0,),)

    def test_example3_size(self, ex3):
        dfa = determinize(ex3)
        assert len(dfa) == 8
        assert all(d.popcount() % 2 == 1 for d in dfa.states)

    def test_bfs_order_is_stable(self, ex3):
        a, b = determinize(ex3), determinize(ex3)
        assert a == b
        assert a.states[0] == ex3.q0

    def test_state_cap(self):
        with pytest.raises(StateLimitError):
            determinize(build_witness(6), max_states=10)

    def test_complete_and_reachable(self, ex4):
        dfa = determinize(ex4)
        seen = {0}
        frontier = [0]
        while frontier:
            i = frontier.pop()
            assert len(dfa.trans[i]) == len(dfa.alphabet)
            for j in dfa.trans[i]:
                if j not in seen:
                    seen.add(j)
                    frontier.append(j)
        assert seen == set(range(len(dfa)))

    def test_never_reaches_empty_set(self):
        rng = random.Random(7)
        for _ in range(50):
            dfa = determinize(random_xnfa(rng.randint(1, 7), rng))
            assert not any(d.is_zero() for d in dfa.states)
            assert len(dfa) <= 2 ** dfa.n - 1

    def test_odd_closure_and_bound(self):
        rng = random.Random(8)
        for _ in range(50):
            nfa = random_odd_machine(rng.randint(2, 8), rng)
            assert has_odd_hypothesis(nfa)
            dfa = determinize(nfa)
            assert all(d.popcount() % 2 == 1 for d in dfa.states)
            assert len(dfa) <= 2 ** (nfa.n - 1)

    def test_agrees_with_word_matrix(self, ex1, ex3, ex4):
        for nfa in (ex1, ex3, ex4):
            dfa = determinize(nfa)
            for w in all_words(nfa.alphabet, 8 if len(nfa.alphabet) == 2 else 6):
                assert dfa.states[dfa.run(w)] == vec_mat_mul(nfa.q0, word_matrix(nfa, w))


class TestWords:
    def test_empty_word(self, ex1):
        assert word_matrix(ex1, "") == BitMatrix.identity(4)

    def test_single_symbol(self, ex1):
        assert word_matrix(ex1, "a") == ex1.matrix("a")

    def test_two_symbols(self, ex1):
        assert word_matrix(ex1, "ab") == mat_mul(ex1.matrix("a"), ex1.matrix("b"))

    def test_unknown_symbol(self, ex1):
        with pytest.raises(KeyError):
            word_matrix(ex1, "z")

    def test_weights_example3(self, ex3):
        assert weight(ex3, "", ex3.fa) == 1
        assert weight(ex3, "aaaa", ex3.fa) == 1
        assert weight(ex3, "a", ex3.fa) == 0

    def test_classify(self, ex3):
        assert classify_word(ex3, "bbbb") is Verdict.ACCEPT
        assert classify_word(ex3, "a") is Verdict.REJECT

    def test_neither(self, ex3):
        z = BitVec.zeros(4)
        assert classify_word(ex3.with_finals(z, z), "ab") is Verdict.NEITHER_ODD

    def test_reached_matches_weight(self, ex4):
        for w in all_words(ex4.alphabet, 4):
            assert reached(ex4, w).dot(ex4.fr) == weight(ex4, w, ex4.fr)


class TestOracle:
    def test_empty_word(self, ex3):
        assert path_parity_oracle(ex3, "", ex3.fa) == 1

    def test_single_state_loop(self):
        one = BitVec.unit(1, 0)
        nfa = Xnfa(("a",), (BitMatrix.identity(1),), one, one, one)
        assert all(path_parity_oracle(nfa, "a" * k, one) == 1 for k in range(17))

    def test_example1_length5(self, ex1):
        for w in all_words(ex1.alphabet, 5):
            for f in (ex1.fa, ex1.fr):
                assert path_parity_oracle(ex1, w, f) == weight(ex1, w, f)

    def test_caps(self):
        nfa = build_witness(9)
        with pytest.raises(PreconditionError):
            path_parity_oracle(nfa, "a", nfa.fa)
        with pytest.raises(PreconditionError):
            path_parity_oracle(example3(), "a" * 17, example3().fa)


class TestMinimize:
    def test_example3_already_minimal(self, ex3):
        assert len(minimize(determinize(ex3))) == 8

    def test_merges_identical_rows(self):
        s = (BitVec.unit(2, 0), BitVec.unit(2, 1))
        dfa = Xdfa(("a",), s, ((1,), (1,)), (Verdict.ACCEPT, Verdict.ACCEPT))
        assert len(minimize(dfa)) == 1

    def test_witness5(self):
        assert len(minimize(determinize(build_witness(5)))) == 16

    def test_invalid_state(self, ex3):
        q = BitVec.unit(4, 0)
        with pytest.raises(SvViolationError) as info:
            minimize(determinize(ex3.with_finals(q, q)))
        assert info.value.state == q

    def test_idempotent(self):
        rng = random.Random(11)
        for _ in range(20):
            nfa = random_odd_machine(rng.randint(2, 7), rng)
            m1 = minimize(determinize(nfa))
            assert len(minimize(m1)) == len(m1)

    def test_language_preserved(self):
        rng = random.Random(12)
        for _ in range(10):
            nfa = random_odd_machine(rng.randint(2, 6), rng)
            nfa = nfa.with_finals(S(nfa.n, [0, 1]), S(nfa.n, [0, 1]).complement())
            m = minimize(determinize(nfa))
            for w in all_words(nfa.alphabet, 6):
                assert m.classify_word(w) is classify_word(nfa, w)

    def test_merges_states_of_a_redundant_machine(self):
        # both states accept and the machine just swaps them: one class
        swap = BitMatrix.from_lists([[0, 1], [1, 0]])
        q0 = BitVec.unit(2, 0)
        nfa = Xnfa(("a",), (swap,), q0, BitVec.ones(2), BitVec.zeros(2))
        assert len(determinize(nfa)) == 2
        assert len(minimize(determinize(nfa))) == 1


class TestIsomorphism:
    def test_self(self, ex3):
        d = determinize(ex3)
        assert xdfa_isomorphic(d, d)

    def test_different_sizes(self):
        assert not xdfa_isomorphic(determinize(build_witness(4)), determinize(build_witness(5)))

    def test_alphabet_mismatch(self, ex3, ex4):
        with pytest.raises(PreconditionError):
            xdfa_isomorphic(determinize(ex3), determinize(ex4))

    def test_classification_matters(self, ex3):
        other = ex3.with_finals(ex3.fr, ex3.fa)
        assert not xdfa_isomorphic(determinize(ex3), determinize(other))

    def test_relabelled_states(self):
        s = (BitVec.unit(2, 0), BitVec.unit(2, 1))
        a = Xdfa(("a",), s, ((1,), (0,)), (Verdict.ACCEPT, Verdict.REJECT))
        b = Xdfa(("a",), s[::-1], ((1,), (0,)), (Verdict.ACCEPT, Verdict.REJECT))
        assert xdfa_isomorphic(a, b)
