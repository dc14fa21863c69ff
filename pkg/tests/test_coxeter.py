import math

import pytest
from hypothesis import given, strategies as st

from klpaths.coxeter import CoxeterError, load_group, parse_matrix_text, three_complete, type_a, type_b

import oracles


def test_group_orders():
    assert len(type_a(3).elements_up_to(100)) == 24
    assert len(type_a(4).elements_up_to(100)) == 120
    assert len(type_b(2).elements_up_to(100)) == 8
    assert len(type_b(3).elements_up_to(100)) == 48


def test_length_distribution_of_S4(A3):
    dist = {}
    for w in A3.elements_up_to(100):
        dist[len(w)] = dist.get(len(w), 0) + 1
    assert [dist[k] for k in range(7)] == [1, 3, 5, 6, 5, 3, 1]


def test_length_is_inversion_count(A4):
    for w in A4.elements_up_to(100):
        assert len(w) == oracles.inversions(oracles.perm(w.word, 5))


def test_bruhat_order_matches_tableau_criterion(A4):
    els = A4.elements_up_to(100)
    perms = {w: oracles.perm(w.word, 5) for w in els}
    for u in els:
        for v in els:
            assert A4.bruhat_leq(u, v) == oracles.bruhat_tableau(perms[u], perms[v])


def test_bruhat_order_matches_subword_criterion(B3, K4):
    for sys, L in [(B3, 9), (K4, 4)]:
        els = sys.elements_up_to(L)
        for u in els:
            for v in els:
                if len(u) <= len(v):
                    assert sys.bruhat_leq(u, v) == oracles.subword_leq(sys, u, v)


def test_comparable_pairs_of_S4(A3_pairs):
    assert len(A3_pairs) == 213


def test_descents(A3):
    w = A3.from_word((0, 1))
    assert A3.descents(w, "right") == {1}
    assert A3.descents(w, "left") == {0}
    assert A3.descents(A3.identity, "left") == set()


def test_positive_roots():
    assert len(type_b(2).positive_roots()) == 4
    assert len(type_a(3).positive_roots()) == 6
    assert len(type_b(3).positive_roots()) == 9
    with pytest.raises(CoxeterError):
        three_complete(3).positive_roots()


def test_reflections_round_trip(B3):
    for beta in B3.positive_roots():
        t = B3.reflection(beta)
        assert len(t) % 2 == 1
        assert B3.as_reflection(t) == beta
        assert B3.multiply(t, t) == B3.identity
    assert B3.as_reflection(B3.from_word((0, 1))) is None


def test_finiteness():
    assert type_a(4).is_finite()
    assert not three_complete(3).is_finite()


def test_matrix_file_parsing(tmp_path):
    sys = parse_matrix_text("3\n1 3 inf\n3 1 3\ninf 3 1\n")
    assert sys.coxeter_matrix[0][2] == math.inf
    f = tmp_path / "g.txt"
    f.write_text("2\n1 4\n4 1\n")
    assert len(load_group(str(f)).elements_up_to(100)) == 8
    with pytest.raises(CoxeterError):
        parse_matrix_text("2\n1 3\n")
    with pytest.raises(CoxeterError):
        load_group("nonsense")


def test_invalid_words(A3):
    with pytest.raises(CoxeterError):
        A3.from_word((3,))
    with pytest.raises(CoxeterError):
        A3.parse_word("1 x")
    assert A3.parse_word("") == A3.identity
    assert A3.parse_word("1 2 1") == A3.parse_word("2,1,2")


words_k4 = st.lists(st.integers(0, 3), max_size=8)


@given(words_k4, words_k4)
def test_group_axioms_in_K4(a, b):
    sys = three_complete(4)
    x, y = sys.from_word(a), sys.from_word(b)
    assert len(x) <= len(a)
    assert len(x) % 2 == len(a) % 2
    assert sys.multiply(x, sys.inverse(x)) == sys.identity
    assert sys.inverse(sys.multiply(x, y)) == sys.multiply(sys.inverse(y), sys.inverse(x))
    assert sys.from_word(x.word) == x and len(x.word) == len(x)


@given(words_k4)
def test_bruhat_is_graded_by_length(a):
    sys = three_complete(4)
    v = sys.from_word(a)
    for i in range(len(v.word)):
        u = sys.from_word(v.word[:i] + v.word[i + 1:])
        assert sys.bruhat_leq(u, v)
        assert not sys.bruhat_leq(v, u)
