import random

import pytest

from klpaths import linalg
from klpaths import threecomplete as tc
from klpaths.coxeter import CoxeterError, three_complete, type_a
from klpaths.ncpoly import CdPoly, complete_cd_index
from klpaths.reflection_order import height_order
from klpaths.words import fib

c, d = CdPoly.gen("c"), CdPoly.gen("d")


def test_d_vector_of_identity(K4):
    dv = tc.d_vector(K4, K4.identity)
    assert dv.c == (1, 0, 0, 0)
    assert dv.d[1:] == (-1, -1, -1)
    assert tc.descents_via_d(K4, K4.identity) == set()


def test_d_vector_rejects_bad_input(K4, A3):
    with pytest.raises(CoxeterError):
        tc.d_vector(K4, K4.from_word((1, 0)))
    with pytest.raises(CoxeterError):
        tc.d_vector(A3, A3.gen(1))


def test_d_recursion_on_random_elements(K4):
    rng = random.Random(7)
    for _ in range(50):
        word = [rng.choice((1, 2, 3)) for _ in range(rng.randint(0, 9))]
        assert tc.recursion_violations(K4, K4.from_word(word)) == []


def test_descent_criterion_and_height_bound(K4):
    for w in tc.parabolic_elements(K4, 6):
        assert tc.descents_via_d(K4, w) == K4.descents(w, "left") - {0}
        dv = tc.d_vector(K4, w)
        assert all(dv.d[i] != 0 for i in range(1, 4))
        assert dv.height >= len(w) + 1


def test_descent_suite_report():
    rep = tc.descent_suite(max_length=4)
    assert rep.ok and len(rep.checks) > 50


def test_wn_family():
    K = three_complete(4)
    assert [w.word for w in tc.wn_family(0)] == [(0,)]
    assert tc.wn_family(1)[0] == three_complete(2).from_word((0, 1))
    W2 = tc.wn_family(2, K)
    assert W2 == [K.from_word((0, 1, 2)), K.from_word((2, 0, 2))]
    for n in range(7):
        fam = tc.wn_family(n)
        assert len(fam) == fib(n + 1)
        assert all(len(v) == n + 1 for v in fam)
    with pytest.raises(CoxeterError):
        tc.wn_family(4, K)


def test_pn_family():
    assert tc.pn_family(0) == (CdPoly.one(),)
    assert tc.pn_family(1) == (c,)
    assert tc.pn_family(2) == (c * c + d, d - 1)
    for n in range(11):
        assert len(tc.pn_family(n)) == fib(n + 1)
        assert tc.sign_violations(n) == []
        assert tc.initial_terms_increase(n)


def test_family_spans_the_intervals_of_wn():
    for n in range(6):
        sys = three_complete(n + 1)
        order = height_order(sys)
        psis = [complete_cd_index(sys, order, sys.identity, v) for v in tc.wn_family(n, sys)]
        monos = tc.space_basis(n)
        rows = lambda polys: [[P.terms.get(w, 0) for w in monos] for P in polys]  # noqa: E731
        r = linalg.rank(rows(psis), len(monos))
        assert r == linalg.rank(rows(list(tc.pn_family(n))), len(monos))
        assert r == linalg.rank(rows(psis + list(tc.pn_family(n))), len(monos))
        # the first member is a chain of pyramids, so it matches exactly
        assert psis[0] == tc.pn_family(n)[0]


def test_mainhomo_ranks():
    for n in range(3):
        for k in range(3):
            assert tc.mainhomo_rank(n, k) == [1, 1, 2][n]
    assert tc.mainhomo_rank(8, 2) == 34


def test_deletion_and_derivative_lemmas():
    for n in range(9):
        assert tc.deletion_violations(n) == []
    assert tc.derivative_order_violations(8) == []


def test_initial_term_order_example():
    assert sorted(["cccc", "ccd", "cdc", "dcc", "dd"]) == ["cccc", "ccd", "cdc", "dcc", "dd"]
    assert tc.initial_term(c * c + d, 2) == "cc"
    assert tc.initial_term(d - 1, 2) == "d"
    assert tc.initial_term(CdPoly.one(), 2) is None


def test_pyramid_suite():
    rep = tc.pyramid_suite(max_length=4)
    assert rep.ok
    assert len(rep.checks) == 6 * 182


def test_finalsvs_suite():
    rep = tc.finalsvs_suite()
    assert rep.ok and len(rep.checks) == 12 * 5


def test_conjugation_theorem():
    rep = tc.conjugation_suite(max_n=5)
    assert rep.ok and len(rep.checks) == sum(fib(n) for n in range(1, 6))


def test_conjecture_span():
    assert tc.conjecture_span(1).rank == 1
    for n in range(1, 6):
        res = tc.conjecture_span(n)
        assert res.ok, (n, res.rank, res.expected)
    res = tc.conjecture_span(5)
    cert = res.certificate().splitlines()
    assert len(cert) == 1 + len(res.monomials)
    assert len(res.matrix()[0]) == len(res.pool)
    assert tc.conjectured_dimension(5) == 8 + 3 + 1


def test_norel_kernel_is_trivial():
    for n in range(5):
        for k in range(2):
            vs, cols, rows = tc.norel_matrix(n, k)
            assert len(cols) == fib(n + 1)
            assert all(len(v) == n + 2 * k + 1 for v in vs)
            assert linalg.rank(rows, len(cols)) == fib(n + 1)
            assert tc.norel_kernel(n, k) == []


def test_report_json_shape():
    rep = tc.run_suite("finalsvs")
    obj = rep.to_json()
    assert obj["ok"] and obj["total"] == obj["passed"] == len(obj["checks"])
    assert rep.table().splitlines()[-1].startswith("# finalsvs: 60/60")
    with pytest.raises(KeyError):
        tc.run_suite("nope")


def test_pyramid_over_a_non_pyramid_fails_as_expected():
    # appending a generator already below v is not a pyramid; the closed form must not hold there
    A4 = type_a(4)
    order = height_order(A4)
    u, v = A4.identity, A4.from_word((0, 1))
    X = complete_cd_index(A4, order, u, v)
    assert complete_cd_index(A4, order, u, A4.from_word((0, 1, 0))) != c * X + tc.gprime(X)
