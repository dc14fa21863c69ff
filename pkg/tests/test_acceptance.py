"""
Acceptance run.  Each criterion prints one PASS/FAIL line (also when run as a
script: python3 tests/test_acceptance.py).
"""

import sys
import time

import pytest

from klpaths import linalg
from klpaths import threecomplete as tc
from klpaths import words as W
from klpaths.bruhat_graph import b_counts, b_table, interval
from klpaths.coxeter import CoxeterError, three_complete, type_a
from klpaths.kl import bridge_rhs, kl_classical, kl_slalom, kmap
from klpaths.lattice import SlalomData, j_set, j_set_bruteforce, omega, omega_tilde, omega_tilde_from_counts, \
    slaloms, upsilon
from klpaths.ncpoly import NCPoly, complete_ab_index, coproduct, derive_Dy, tensor_of, to_cd
from klpaths.polys import QPoly
from klpaths.qsym import QSymSlice, bb_relation_violation, convert, d_basis, dual_relation_violation, expand_in_d, \
    f_tilde, from_d_expansion
from klpaths.reflection_order import biparabolic_order, good_order, height_order

A3, A4, K4 = type_a(3), type_a(4), three_complete(4)
H3, H4 = height_order(A3), height_order(A4)


def _pairs(sys, max_length, max_gap=None):
    els = sys.elements_up_to(max_length)
    return [(u, v) for u in els for v in els
            if sys.bruhat_leq(u, v) and (max_gap is None or len(v) - len(u) <= max_gap)]


S4_ELEMENTS = A3.elements_up_to(100)
S4_PAIRS = _pairs(A3, 100)
S4_STRICT = [(u, v) for u, v in S4_PAIRS if u != v]


def q(*coeffs):
    return QPoly(coeffs)


# -- criteria ----------------------------------------------------------------


def criterion_1():
    # every unordered pair of S4: comparable ones must agree, the rest are rejected by both methods
    bad, rejected = [], 0
    for i, x in enumerate(S4_ELEMENTS):
        for y in S4_ELEMENTS[i + 1:]:
            u, v = (x, y) if len(x) <= len(y) else (y, x)
            if A3.bruhat_leq(u, v):
                if kl_slalom(A3, u, v) != kl_classical(A3, u, v):
                    bad.append((u, v))
                continue
            for f in (kl_slalom, kl_classical):
                try:
                    f(A3, u, v)
                except CoxeterError:
                    rejected += 1
    unordered = len(S4_ELEMENTS) * (len(S4_ELEMENTS) - 1) // 2
    incomparable = unordered - (len(S4_PAIRS) - len(S4_ELEMENTS))
    diag_ok = all(kl_slalom(A3, w, w) == kl_classical(A3, w, w) == q(1) for w in S4_ELEMENTS)
    s5 = _pairs(A4, 100, 8)
    for u, v in s5:
        if kl_slalom(A4, u, v, H4) != kl_classical(A4, u, v):
            bad.append((u, v))
    ok = not bad and diag_ok and rejected == 2 * incomparable and unordered == 276
    return ok, f"S4: {unordered} unordered pairs, S5: {len(s5)} comparable pairs, mismatches {len(bad)}"


def criterion_2():
    checks = {
        "Upsilon_001010": upsilon(W.parse("001010")) == q(0, 0, 0, -1, 1),
        "Omega_00100": omega(W.parse("00100")) == q(0, -1, 2),
        "Omega~_00100": omega_tilde(W.parse("00100")) == q(0, -1, 2, 0, -2, 1),
        "|SL(00100)|": len(slaloms(W.parse("00100"))) == 3,
        "D_00100": d_basis(W.parse("00100")) == QSymSlice(6, "L", {W.parse(w): c for w, c in [
            ("01111", -1), ("01100", -1), ("00100", 1), ("10000", -1),
            ("10011", -1), ("00111", 1), ("11000", 1), ("11011", 1)]}),
        "small Omegas": [omega(()), omega((0,)), omega((0, 0)), omega((0, 1))] == [q(1), q(1), q(1, -2), q(0, 1)],
    }
    n3 = 0
    ok3 = True
    for u, v in S4_STRICT:
        if len(v) - len(u) == 3:
            n3 += 1
            b3, b1 = b_counts(A3, H3, u, v, 3), b_counts(A3, H3, u, v, 1)
            ok3 &= kl_classical(A3, u, v) == q(1, -2 + b3[(0, 1)] + b1[()])
    checks[f"length-3 formula on {n3} intervals"] = ok3
    failed = [k for k, v in checks.items() if not v]
    return not failed, "failed: " + ", ".join(failed) if failed else f"{len(checks)} groups of constants"


def criterion_3():
    bad = [(u, v) for u, v in S4_STRICT
           if kmap(f_tilde(A3, H3, u, v)) != bridge_rhs(kl_classical(A3, u, v), len(v) - len(u))]
    return not bad, f"{len(S4_STRICT)} intervals u < v, failures {len(bad)}"


def criterion_4():
    bad = []
    for u, v in S4_STRICT:
        table = b_table(A3, H3, u, v)
        for deg, F in f_tilde(A3, H3, u, v).items():
            m = deg - 1
            if dual_relation_violation(convert(F, "L").coeffs, m) is not None:
                bad.append(("L-form", u, v))
            if bb_relation_violation(convert(F, "M").coeffs, m) is not None:
                bad.append(("M-form", u, v))
            h = expand_in_d(F)
            if h != {T: table[T] for T in W.sparse_words(m) if table.get(T)} or from_d_expansion(deg, h) != F:
                bad.append(("D-expansion", u, v))
    dims = []
    for m in range(10):
        rows = [[d_basis(T)[E] for E in W.words(m)] for T in W.sparse_words(m)]
        dims.append(linalg.rank(rows, 2 ** m) == W.fib(m + 1))
    return not bad and all(dims), f"{len(S4_STRICT)} intervals, {len(bad)} failures; span dimensions for |T| <= 9"


def criterion_5():
    bad = []
    count = 0
    for m in range(11):
        for T in W.sparse_words(m):
            count += 1
            n = m + 1
            data = SlalomData(T)
            L = data.L()
            ok = data.signed_sum(L) == omega_tilde(T)
            if m <= 9:
                ok &= dict(j_set(T)) == dict(j_set_bruteforce(T))
            ok &= data.signed_sum([p for p in L if data.in_L0(p)]) == QPoly()
            if n % 2 == 0:
                ok &= data.signed_sum([p for p in L if data.in_L0prime(p) and not data.in_L0(p)]) == QPoly()
            ok &= all((data.eps(p) + data.eta(p)) % 2 == data.parity_rhs(p) for p in data.Ltilde())
            ok &= omega_tilde_from_counts(T) == omega_tilde(T)
            ok &= omega_tilde(T).reciprocal(n) == -omega_tilde(T)
            if not ok:
                bad.append(W.fmt(T))
    return not bad, f"{count} sparse words, failures {bad[:5]}"


def criterion_6():
    orders = {"height": H3, "good": good_order(A3, 0), "biparabolic": biparabolic_order(A3, 0, 2),
              "biparabolic(2,1)": biparabolic_order(A3, 2, 1)}
    bad = 0
    for u, v in S4_STRICT:
        tables = [b_table(A3, o, u, v) for o in orders.values()]
        bad += any(t != tables[0] for t in tables)
    return not bad, f"{len(orders)} orderings on {len(S4_STRICT)} intervals, disagreements {bad}"


def criterion_7():
    notes = []
    ok = True
    for u, v in S4_STRICT:
        cd = to_cd(complete_ab_index(A3, H3, u, v))
        ok &= all(isinstance(c, int) for c in cd.terms.values())
    d_nc = NCPoly({"ab": 1, "ba": 1})
    for u, v in S4_STRICT:
        if len(v) - len(u) > 5:
            continue
        pairs, rhs = [], NCPoly()
        for x in interval(A3, u, v).open_elements():
            left, right = complete_ab_index(A3, H3, u, x), complete_ab_index(A3, H3, x, v)
            pairs.append((left, right))
            rhs = rhs + left * d_nc * right
        psi = complete_ab_index(A3, H3, u, v)
        ok &= coproduct(psi) == tensor_of(pairs)
        ok &= derive_Dy(psi, d_nc) == rhs
    for rep in (tc.pyramid_suite(max_length=4), tc.finalsvs_suite(rank=4, max_length=4)):
        ok &= rep.ok
        notes.append(f"{rep.suite} {len(rep.checks) - len(rep.failures())}/{len(rep.checks)}")
    return ok, "cd-expressible, coalgebra, derivation; " + ", ".join(notes)


def criterion_8():
    rep = tc.descent_suite(rank=4, max_length=6)
    return rep.ok, f"{len(rep.checks) - len(rep.failures())}/{len(rep.checks)} checks"


def criterion_9():
    start = time.perf_counter()
    homo = tc.mainhomo_suite(max_n=8, max_k=2)
    conj = tc.conjecture_suite(max_n=5)
    spent = time.perf_counter() - start
    ok = homo.ok and conj.ok and spent < 600
    return ok, f"mainhomo {len(homo.checks)} cases, conjecture n <= 5, {spent:.1f}s"


def criterion_10():
    rep = tc.norel_suite(max_n=4, max_k=1)
    return rep.ok, f"{len(rep.checks)} (n, k) instances with trivial kernel"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run(i):
    start = time.perf_counter()
    try:
        ok, detail = CRITERIA[i - 1]()
    except Exception as exc:  # a crash is a failure, reported like one
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    line = f"{'PASS' if ok else 'FAIL'} criterion {i}: {detail} ({time.perf_counter() - start:.1f}s)"
    return ok, line


@pytest.mark.parametrize("i", range(1, 11))
def test_criterion(i, capsys):
    ok, line = run(i)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run(i) for i in range(1, 11)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
