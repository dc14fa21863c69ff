"""
Groups with m(s, s') = 3 for every pair of generators, and the cd-polynomial
families and identities built on them.

Generators are 0-based here: generator 0 plays the role of the distinguished
first generator, and "the parabolic" means the subgroup generated by 1..l-1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import linalg
from .bruhat_graph import b_table, interval
from .coxeter import CoxElem, CoxeterError, CoxSystem, three_complete, type_a
from .ncpoly import CdPoly, NCPoly, cd_monomials, complete_ab_index, derive_Dy, gprime, to_cd
from .reflection_order import RefOrder, good_order, height_order, lower_conjugate
from .words import fib, sparse_words

_C = CdPoly.gen("c")
_D = CdPoly.gen("d")
_A_NC = NCPoly.gen("a")
_B_NC = NCPoly.gen("b")


def is_three_complete(sys: CoxSystem) -> bool:
    n = sys.rank
    return all(sys.coxeter_matrix[i][j] == 3 for i in range(n) for j in range(n) if i != j)


# -- coordinates of w(alpha_1) ------------------------------------------------


@dataclass(frozen=True)
class DVector:
    """c_i: coordinates of w(alpha_1); d_i = 2 c_i - sum of the other c_k."""

    c: tuple[int, ...]
    d: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.c)


def d_vector(sys: CoxSystem, w: CoxElem) -> DVector:
    if not is_three_complete(sys):
        raise CoxeterError(f"{sys.name or 'group'} is not 3-complete")
    if 0 in w.word:
        raise CoxeterError(f"{w!r} uses the first generator")
    c = sys.apply(w, sys.simple_root(0))
    total = sum(c)
    return DVector(tuple(c), tuple(3 * ci - total for ci in c))


def descents_via_d(sys: CoxSystem, w: CoxElem) -> set[int]:
    """Left descents of w among generators 1..l-1, read off from the signs of d_i."""
    dv = d_vector(sys, w)
    return {i for i in range(1, sys.rank) if dv.d[i] > 0}


def recursion_violations(sys: CoxSystem, u: CoxElem) -> list[tuple[int, int]]:
    """Pairs (i, j) where the one-step update of d under u -> s_i u fails (j == i for the sign flip)."""
    du = d_vector(sys, u).d
    bad = []
    for i in range(1, sys.rank):
        dsu = d_vector(sys, sys.from_word((i,) + u.word)).d
        if dsu[i] != -du[i]:
            bad.append((i, i))
        for j in range(1, sys.rank):
            if j != i and dsu[j] != du[i] + du[j]:
                bad.append((i, j))
    return bad


def parabolic_elements(sys: CoxSystem, max_length: int) -> list[CoxElem]:
    return sys.elements_up_to(max_length, range(1, sys.rank))


def descent_suite(rank: int = 4, max_length: int = 6, samples: int = 50, seed: int = 0) -> "Report":
    """d-vector criterion for left descents, the height bound and the one-step recursion."""
    sys = three_complete(rank)
    rep = Report("descents")
    elems = parabolic_elements(sys, max_length)
    for w in elems:
        direct = sys.descents(w, "left") - {0}
        via = descents_via_d(sys, w)
        dv = d_vector(sys, w)
        nonzero = all(dv.d[i] != 0 for i in range(1, rank))
        rep.add(f"descents {w!r}", direct == via and nonzero, f"direct={sorted(direct)} via_d={sorted(via)}")
        rep.add(f"height {w!r}", dv.height >= len(w) + 1, f"ht={dv.height} len={len(w)}")
    rng = random.Random(seed)
    for w in rng.sample(elems, min(samples, len(elems))):
        bad = recursion_violations(sys, w)
        rep.add(f"recursion {w!r}", not bad, f"failures={bad}" if bad else "")
    return rep


# -- the element family W_n and the polynomial family P_(n,j) -------------------


@lru_cache(maxsize=None)
def wn_words(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((0,),)
    if n == 1:
        return ((0, 1),)
    return tuple(w + (n,) for w in wn_words(n - 1)) + tuple((n,) + w + (n,) for w in wn_words(n - 2))


def wn_family(n: int, sys: CoxSystem | None = None) -> list[CoxElem]:
    """W_n inside the 3-complete group of rank n + 1 (or a given larger one)."""
    if sys is None:
        sys = three_complete(n + 1)
    if sys.rank < n + 1:
        raise CoxeterError(f"W_{n} needs rank >= {n + 1}")
    return [sys.from_word(w) for w in wn_words(n)]


@lru_cache(maxsize=None)
def pn_family(n: int) -> tuple[CdPoly, ...]:
    """P_(n,1), ..., P_(n,f_(n+1)) in order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (CdPoly.one(),)
    if n == 1:
        return (_C,)
    first = tuple(_C * P + gprime(P) for P in pn_family(n - 1))
    second = tuple((_D - 1) * P for P in pn_family(n - 2))
    return first + second


def initial_term(P: CdPoly, degree: int) -> str | None:
    """Smallest monomial of the given degree with nonzero coefficient (c before d)."""
    monos = [w for w in P.terms if P.deg(w) == degree]
    return min(monos) if monos else None


def sign_violations(n: int) -> list[tuple[int, str]]:
    """(j, monomial) where a degree n - 2i coefficient of P_(n,j) has sign opposite to (-1)^i."""
    bad = []
    for j, P in enumerate(pn_family(n), 1):
        for w, c in P.terms.items():
            i = (n - P.deg(w)) // 2
            if c * (-1) ** i < 0:
                bad.append((j, w))
    return bad


def initial_terms_increase(n: int) -> bool:
    inits = [initial_term(P, n) for P in pn_family(n)]
    return None not in inits and all(a < b for a, b in zip(inits, inits[1:]))


def deletion_violations(n: int) -> list[tuple[int, str]]:
    """Nonzero lower monomials not reachable by deleting one d from a nonzero monomial two degrees up."""
    bad = []
    for j, P in enumerate(pn_family(n), 1):
        by_deg: dict[int, set[str]] = {}
        for w in P.terms:
            by_deg.setdefault(P.deg(w), set()).add(w)
        for deg in sorted(by_deg):
            if deg == n:
                continue
            above = by_deg.get(deg + 2, set())
            reach = {w[:k] + w[k + 1:] for w in above for k, ch in enumerate(w) if ch == "d"}
            bad.extend((j, w) for w in sorted(by_deg[deg] - reach))
    return bad


def derivative_order_violations(max_degree: int) -> list[tuple[str, str]]:
    """(I, M) with I <= M of equal degree but some monomial of G'(M) below cI."""
    bad = []
    for m in range(max_degree + 1):
        monos = cd_monomials(m)
        for M in monos:
            low = min(gprime(CdPoly.gen(M) if M else CdPoly.one()).terms, default=None)
            if low is None:
                continue
            for I in monos:
                if I <= M and low < "c" + I:
                    bad.append((I, M))
    return bad


def homogeneous_rows(polys: Iterable[CdPoly], degree: int) -> list[list[int]]:
    monos = cd_monomials(degree)
    return [[P.terms.get(w, 0) for w in monos] for P in polys]


def mainhomo_rank(n: int, k: int) -> int:
    """Rank of the degree-n parts of (d - 1)^k P_(n,j) over all j."""
    factor = (_D - 1) ** k
    polys = [factor * P for P in pn_family(n)]
    return linalg.rank(homogeneous_rows(polys, n), fib(n + 1))


# -- identity reports ---------------------------------------------------------


@dataclass
class Check:
    instance: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, instance: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(instance, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def table(self) -> str:
        lines = [f"{'PASS' if c.ok else 'FAIL'}\t{c.instance}" + (f"\t{c.detail}" if c.detail else "")
                 for c in self.checks]
        passed = sum(c.ok for c in self.checks)
        lines.append(f"# {self.suite}: {passed}/{len(self.checks)} passed")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "passed": sum(c.ok for c in self.checks),
            "total": len(self.checks),
            "checks": [{"instance": c.instance, "ok": c.ok, "detail": c.detail} for c in self.checks],
            "info": self.info,
        }


def _ab(sys: CoxSystem, order: RefOrder, u: CoxElem, v: CoxElem) -> NCPoly:
    return complete_ab_index(sys, order, u, v)


def _pair_sum(sys, order_left, order_right, u, v, middle) -> NCPoly:
    """Sum over x strictly between u and v of Psi(u,x) * middle * Psi(x,v)."""
    out = NCPoly()
    for x in interval(sys, u, v).open_elements():
        out = out + _ab(sys, order_left, u, x) * middle * _ab(sys, order_right, x, v)
    return out


def pyramid_suite(max_length: int = 4, base_rank: int = 3) -> Report:
    """
    Pyramids over intervals of A_(base_rank) with a fresh generator appended:
    both single-ordering expansions, their average, the D_d form and the
    G' forms on the right and on the left.
    """
    sys = type_a(base_rank + 1)
    s = base_rank
    good = good_order(sys, s)
    conj = lower_conjugate(good, s)
    height = height_order(sys)
    rep = Report("pyramid")
    base = sys.elements_up_to(10**6, range(base_rank))
    for u in base:
        for v in base:
            if u == v or not sys.bruhat_leq(u, v) or len(v) - len(u) > max_length:
                continue
            vs = sys.from_word(v.word + (s,))
            sv = sys.from_word((s,) + v.word)
            name = f"[{u!r},{v!r}]"
            psi = _ab(sys, height, u, v)
            one = _B_NC * _ab(sys, good, u, v) + _ab(sys, good, u, v) * _A_NC \
                + _pair_sum(sys, good, good, u, v, _A_NC * _B_NC)
            rep.add(f"{name} good order", _ab(sys, good, u, vs) == one)
            two = _A_NC * _ab(sys, conj, u, v) + _ab(sys, conj, u, v) * _B_NC \
                + _pair_sum(sys, conj, conj, u, v, _B_NC * _A_NC)
            rep.add(f"{name} conjugate order", _ab(sys, conj, u, vs) == two)
            target = to_cd(_ab(sys, height, u, vs))
            base_cd = to_cd(psi)
            dd = NCPoly({"ab": 1, "ba": 1})
            avg = psi * (_A_NC + _B_NC) + (_A_NC + _B_NC) * psi + _pair_sum(sys, height, height, u, v, dd)
            rep.add(f"{name} average", to_cd(avg) == target * 2)
            rep.add(f"{name} D_d form", to_cd(psi * (_A_NC + _B_NC) + (_A_NC + _B_NC) * psi + derive_Dy(psi, dd))
                    == target * 2)
            closed = _C * base_cd + gprime(base_cd)
            rep.add(f"{name} right G'", target == closed, str(target))
            rep.add(f"{name} left G'", to_cd(_ab(sys, height, u, sv)) == closed)
    return rep


def finalsvs_suite(rank: int = 4, max_length: int = 4) -> Report:
    """Psi(e,svs) + d Psi(e,v) = Psi(e,rvs) + Psi(e,v) for v != e in the parabolic avoiding r, s."""
    sys = three_complete(rank)
    order = height_order(sys)
    e = sys.identity
    rep = Report("finalsvs")
    for r in range(rank):
        for s in range(rank):
            if r == s:
                continue
            rest = [i for i in range(rank) if i not in (r, s)]
            for v in sys.elements_up_to(max_length, rest):
                if v == e:
                    continue
                svs = sys.from_word((s,) + v.word + (s,))
                rvs = sys.from_word((r,) + v.word + (s,))
                pv = to_cd(_ab(sys, order, e, v))
                lhs = to_cd(_ab(sys, order, e, svs)) + _D * pv
                rhs = to_cd(_ab(sys, order, e, rvs)) + pv
                rep.add(f"r={r + 1} s={s + 1} v={v!r}", lhs == rhs, f"lhs={lhs}")
    return rep


def conjugation_formula(sys: CoxSystem, v: CoxElem, order: RefOrder | None = None) -> CdPoly:
    """Psi(e,v) c + sum over x in (e,v) of Psi(e,x) d Psi(x,v)."""
    order = order or height_order(sys)
    e = sys.identity
    out = _ab(sys, order, e, v) * (_A_NC + _B_NC) + _pair_sum(sys, order, order, e, v, NCPoly({"ab": 1, "ba": 1}))
    return to_cd(out)


def conjugation_interval(n: int) -> tuple[CoxSystem, list[tuple[CoxElem, CoxElem, CoxElem]]]:
    """(v, s, s v s) for v in W_(n-1), s the last generator of the rank n+1 group."""
    sys = three_complete(n + 1)
    s = n
    out = []
    for v in wn_family(n - 1, sys):
        out.append((v, sys.gen(s), sys.from_word((s,) + v.word + (s,))))
    return sys, out


def conjugation_suite(max_n: int = 5) -> Report:
    rep = Report("conjugation")
    for n in range(1, max_n + 1):
        sys, triples = conjugation_interval(n)
        order = height_order(sys)
        for v, s, svs in triples:
            direct = to_cd(_ab(sys, order, s, svs))
            rep.add(f"n={n} v={v!r}", direct == conjugation_formula(sys, v, order), str(direct))
    return rep


def mainhomo_suite(max_n: int = 8, max_k: int = 2) -> Report:
    rep = Report("mainhomo")
    for n in range(max_n + 1):
        for k in range(max_k + 1):
            r = mainhomo_rank(n, k)
            rep.add(f"n={n} k={k}", r == fib(n + 1), f"rank={r} expected={fib(n + 1)}")
    for n in range(max_n + 1):
        rep.add(f"signs n={n}", not sign_violations(n))
        rep.add(f"initial terms n={n}", initial_terms_increase(n))
        rep.add(f"deletion n={n}", not deletion_violations(n))
    bad = derivative_order_violations(max_n)
    rep.add(f"derivative order degree<={max_n}", not bad, f"failures={bad[:3]}" if bad else "")
    return rep


# -- span of complete cd-indices ------------------------------------------------


def conjectured_dimension(n: int) -> int:
    return sum(fib(i + 1) for i in range(n % 2, n + 1, 2))


def space_basis(n: int) -> list[str]:
    """cd-monomials of degree n, n-2, ... (the ambient space of rank n+1 indices)."""
    out = []
    for i in range(n, -1, -2):
        out.extend(cd_monomials(i))
    return out


@dataclass
class SpanResult:
    n: int
    rank: int
    expected: int
    pool: list[tuple[str, CdPoly]]
    monomials: list[str]

    @property
    def ok(self) -> bool:
        return self.rank == self.expected

    def matrix(self) -> list[list[int]]:
        """Rows are monomials, columns are pool intervals."""
        return [[P.terms.get(w, 0) for _, P in self.pool] for w in self.monomials]

    def certificate(self) -> str:
        head = "monomial\t" + "\t".join(name for name, _ in self.pool)
        rows = [f"{w or '1'}\t" + "\t".join(str(x) for x in row) for w, row in zip(self.monomials, self.matrix())]
        return "\n".join([head] + rows)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "expected": self.expected,
            "ok": self.ok,
            "pool": [{"interval": name, "cd": P.to_json()["cd"]} for name, P in self.pool],
        }


@lru_cache(maxsize=None)
def _pool(n: int) -> tuple[tuple[str, CdPoly], ...]:
    """
    Complete cd-indices of rank n+1 intervals: [s, svs] for v in W_(n-1),
    [e, v] for v in W_n, and pyramids (c X + G'X) over the rank-n pool.
    """
    if n < 1:
        return (("[e,s1]", CdPoly.one()),)
    out: list[tuple[str, CdPoly]] = []
    sys, triples = conjugation_interval(n)
    order = height_order(sys)
    for v, s, svs in triples:
        out.append((f"K{n + 1}[{s!r},{svs!r}]", to_cd(_ab(sys, order, s, svs))))
    sys_n = three_complete(n + 1)
    order_n = height_order(sys_n)
    for v in wn_family(n, sys_n):
        out.append((f"K{n + 1}[e,{v!r}]", to_cd(_ab(sys_n, order_n, sys_n.identity, v))))
    for name, X in _pool(n - 1):
        out.append((f"pyr{name}", _C * X + gprime(X)))
    seen: set[CdPoly] = set()
    uniq = []
    for name, P in out:
        if P not in seen:
            seen.add(P)
            uniq.append((name, P))
    return tuple(uniq)


def conjecture_span(n: int) -> SpanResult:
    if n < 1:
        raise ValueError("n must be >= 1")
    pool = list(_pool(n))
    monos = space_basis(n)
    rows = [[P.terms.get(w, 0) for w in monos] for _, P in pool]
    stray = [w for _, P in pool for w in P.terms if w not in set(monos)]
    if stray:
        raise RuntimeError(f"pool polynomial has a monomial outside the space: {stray[0]}")
    return SpanResult(n, linalg.rank(rows, len(monos)), conjectured_dimension(n), pool, monos)


def conjecture_suite(max_n: int = 5) -> Report:
    rep = Report("conjecture1")
    for n in range(1, max_n + 1):
        res = conjecture_span(n)
        rep.add(f"n={n}", res.ok, f"rank={res.rank} expected={res.expected} pool={len(res.pool)}")
        rep.info[f"n={n}"] = res.to_json()
    return rep


# -- no linear relations among the sparse path counts ---------------------------


def norel_matrix(n: int, k: int) -> tuple[list[CoxElem], list[tuple[int, ...]], list[list[int]]]:
    """Rows v in W_(n+2k) (length n+2k+1), columns sparse T of length n, entries b(e,v)_T."""
    m = n + 2 * k
    sys = three_complete(m + 1)
    order = height_order(sys)
    cols = list(sparse_words(n))
    vs = wn_family(m, sys)
    rows = []
    for v in vs:
        table = b_table(sys, order, sys.identity, v)
        rows.append([table.get(T, 0) for T in cols])
    return vs, cols, rows


def norel_kernel(n: int, k: int) -> list[list[Fraction]]:
    _, cols, rows = norel_matrix(n, k)
    return linalg.nullspace(rows, len(cols))


def norel_suite(max_n: int = 4, max_k: int = 1) -> Report:
    rep = Report("norel")
    for n in range(max_n + 1):
        for k in range(max_k + 1):
            ker = norel_kernel(n, k)
            rep.add(f"n={n} k={k}", not ker, f"kernel dimension {len(ker)}, columns {fib(n + 1)}")
    return rep


SUITES = {
    "pyramid": lambda n: pyramid_suite(max_length=n or 4),
    "finalsvs": lambda n: finalsvs_suite(rank=n or 4),
    "conjugation": lambda n: conjugation_suite(max_n=n or 5),
    "descents": lambda n: descent_suite(max_length=n or 6),
    "mainhomo": lambda n: mainhomo_suite(max_n=n or 8),
    "conjecture1": lambda n: conjecture_suite(max_n=n or 5),
    "norel": lambda n: norel_suite(max_n=n or 4),
}


def run_suite(name: str, n: int | None = None) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](n)
