"""
Integer polynomials in the noncommuting letters a, b and their rewriting in
c = a + b, d = ab + ba.

Monomials are plain strings ("aab", "cdc"); the empty string is 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import linalg
from .qsym import dual_relation_violation
from .words import Word


class NotExpressible(ValueError):
    def __init__(self, degree: int, witness: tuple[Word, Word]):
        E, F = witness
        e = "".join(map(str, E)) or "e"
        f = "".join(map(str, F)) or "e"
        super().__init__(f"degree {degree} part is not a polynomial in c, d (relation E={e}, F={f} fails)")
        self.degree = degree
        self.witness = witness


class _Poly:
    """Shared dict-of-monomials arithmetic."""

    letters = ""
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[str, int] | None = None):
        clean: dict[str, int] = {}
        for w, c in (terms or {}).items():
            if any(ch not in self.letters for ch in w):
                raise ValueError(f"bad monomial {w!r} for letters {self.letters!r}")
            if c:
                clean[w] = clean.get(w, 0) + c
        self.terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def one(cls):
        return cls({"": 1})

    @classmethod
    def gen(cls, letter: str):
        return cls({letter: 1})

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self)({"": other})
        return type(other) is type(self) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = type(self)({"": other})
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = type(self)({"": other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)({w: other * c for w, c in self.terms.items()})
        out: dict[str, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
        return type(self)(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = type(self).one()
        for _ in range(k):
            out = out * self
        return out

    def homogeneous(self, degree: int):
        return type(self)({w: c for w, c in self.terms.items() if self.deg(w) == degree})

    def degrees(self) -> list[int]:
        return sorted({self.deg(w) for w in self.terms})

    @staticmethod
    def deg(w: str) -> int:
        return len(w)


class NCPoly(_Poly):
    letters = "ab"

    def __repr__(self):
        return f"NCPoly({self.terms})"

    def __str__(self):
        return _fmt(self.terms, lambda w: w, self.deg)

    @classmethod
    def mu(cls, E: Iterable[int]) -> "NCPoly":
        """mu_E = mu_(E_1) ... mu_(E_n) with mu_0 = a, mu_1 = b."""
        return cls({"".join("ab"[x] for x in E): 1})

    def beta(self, degree: int) -> dict[Word, int]:
        """Coefficient of mu_E for each E of the given length."""
        return {tuple(int(ch == "b") for ch in w): c for w, c in self.terms.items() if len(w) == degree}


class CdPoly(_Poly):
    letters = "cd"

    @staticmethod
    def deg(w: str) -> int:
        return len(w) + w.count("d")

    def __repr__(self):
        return f"CdPoly({self.terms})"

    def sorted_terms(self) -> list[tuple[str, int]]:
        """Degree descending, then lexicographic with c before d."""
        return sorted(self.terms.items(), key=lambda kv: (-self.deg(kv[0]), kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = _compress(w)
            if not mono:
                parts.append(f"({c})" if c != 1 else "1")
            else:
                parts.append(mono if c == 1 else f"({c}){mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"cd": [[w, c] for w, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "CdPoly":
        return cls({w: int(c) for w, c in obj["cd"]})

    def expand(self) -> NCPoly:
        return expand(self)


def _compress(w: str) -> str:
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


def _fmt(terms, mono, deg) -> str:
    if not terms:
        return "0"
    items = sorted(terms.items(), key=lambda kv: (-deg(kv[0]), kv[0]))
    return " + ".join((_compress(w) or "1") if c == 1 else f"({c}){_compress(w)}" for w, c in items)


_C = NCPoly({"a": 1, "b": 1})
_D = NCPoly({"ab": 1, "ba": 1})


@lru_cache(maxsize=None)
def _expand_mono(w: str) -> NCPoly:
    if not w:
        return NCPoly.one()
    return _expand_mono(w[:-1]) * (_C if w[-1] == "c" else _D)


def expand(P: CdPoly) -> NCPoly:
    out = NCPoly()
    for w, c in P.terms.items():
        out = out + _expand_mono(w) * c
    return out


def cd_monomials(n: int) -> list[str]:
    """The cd-monomials of degree n (there are f_(n+1) of them)."""
    if n < 0:
        return []
    if n == 0:
        return [""]
    return sorted([w + "c" for w in cd_monomials(n - 1)] + [w + "d" for w in cd_monomials(n - 2)])


# -- coproduct and derivations ---------------------------------------------


def coproduct(P: NCPoly) -> dict[tuple[str, str], int]:
    """Sum over positions i of (prefix before i) (x) (suffix after i), as a pair map."""
    out: dict[tuple[str, str], int] = {}
    for w, c in P.terms.items():
        for i in range(len(w)):
            key = (w[:i], w[i + 1:])
            out[key] = out.get(key, 0) + c
    return {k: c for k, c in out.items() if c}


def derive_Dy(P: NCPoly, y: NCPoly) -> NCPoly:
    out = NCPoly()
    for (left, right), c in coproduct(P).items():
        out = out + NCPoly({left: c}) * y * NCPoly({right: 1})
    return out


def tensor_of(pairs: Iterable[tuple[NCPoly, NCPoly]]) -> dict[tuple[str, str], int]:
    """Expand a sum of P (x) Q into the monomial pair map used by ``coproduct``."""
    out: dict[tuple[str, str], int] = {}
    for P, Q in pairs:
        for w1, c1 in P.terms.items():
            for w2, c2 in Q.terms.items():
                out[(w1, w2)] = out.get((w1, w2), 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


_GPRIME_NC = {"a": "ab", "b": "ba"}
_GPRIME_CD = {"c": ("d",), "d": ("dc",)}


def gprime(P):
    """The derivation with a -> ab, b -> ba (so c -> d and d -> dc)."""
    if isinstance(P, NCPoly):
        images = {k: (v,) for k, v in _GPRIME_NC.items()}
    elif isinstance(P, CdPoly):
        images = _GPRIME_CD
    else:
        raise TypeError(f"gprime expects NCPoly or CdPoly, not {type(P).__name__}")
    out: dict[str, int] = {}
    for w, c in P.terms.items():
        for i, ch in enumerate(w):
            for img in images[ch]:
                nw = w[:i] + img + w[i + 1:]
                out[nw] = out.get(nw, 0) + c
    return type(P)(out)


# -- recognising cd-polynomials ---------------------------------------------

MAX_DEGREE = 16


def _peel(terms: dict[str, int], n: int) -> dict[str, int]:
    """
    Write a homogeneous degree-n polynomial (known to satisfy the dual
    relations) as Q c + R d and recurse.  Returns cd-terms.
    """
    if n == 0:
        c = terms.get("", 0)
        return {"": c} if c else {}
    if not terms:
        return {}
    if n == 1:
        out = {"c": terms.get("a", 0)} if terms.get("a", 0) else {}
        return out
    Q: dict[str, int] = {}
    R: dict[str, int] = {}
    for w, c in terms.items():
        tail = w[-2:]
        if tail == "aa":
            Q[w[:-1]] = Q.get(w[:-1], 0) + c
            R[w[:-2]] = R.get(w[:-2], 0) - c
        elif tail == "bb":
            Q[w[:-1]] = Q.get(w[:-1], 0) + c
        elif tail == "ab":
            R[w[:-2]] = R.get(w[:-2], 0) + c
    out: dict[str, int] = {}
    for w, c in _peel({k: v for k, v in Q.items() if v}, n - 1).items():
        out[w + "c"] = c
    for w, c in _peel({k: v for k, v in R.items() if v}, n - 2).items():
        out[w + "d"] = c
    return out


def to_cd(P: NCPoly) -> CdPoly:
    """
    Rewrite P in c, d.  Each homogeneous part is first checked against the
    dual relations, then peeled; the result is re-expanded and compared.
    """
    out: dict[str, int] = {}
    for n in P.degrees():
        if n > MAX_DEGREE:
            raise ValueError(f"degree {n} exceeds the cap of {MAX_DEGREE}")
        part = P.homogeneous(n)
        bad = dual_relation_violation(part.beta(n), n)
        if bad is not None:
            raise NotExpressible(n, bad)
        out.update(_peel(part.terms, n))
    res = CdPoly(out)
    if expand(res) != P:
        raise RuntimeError("cd rewriting failed to reproduce the input")
    return res


def to_cd_solve(P: NCPoly) -> CdPoly:
    """Independent route: exact rational solve against the expanded cd-basis."""
    out: dict[str, int] = {}
    for n in P.degrees():
        basis = cd_monomials(n)
        expanded = [_expand_mono(w) for w in basis]
        ab_words = sorted({w for e in expanded for w in e.terms} | set(P.homogeneous(n).terms))
        rows = [[e.terms.get(w, 0) for e in expanded] for w in ab_words]
        rhs = [P.terms.get(w, 0) for w in ab_words]
        x = linalg.solve(rows, rhs)
        if x is None:
            raise NotExpressible(n, dual_relation_violation(P.homogeneous(n).beta(n), n) or ((), ()))
        for w, val in zip(basis, x):
            if val.denominator != 1:
                raise RuntimeError(f"non-integral cd coefficient {val} at {w}")
            if val:
                out[w] = int(val)
    return CdPoly(out)


# -- complete cd-index of a Bruhat interval ---------------------------------


def path_polynomial(b: Mapping[Word, int]) -> NCPoly:
    """Sum of b_E mu_(E^op): each path contributes its labels read left to right."""
    out: dict[str, int] = {}
    for E, c in b.items():
        w = "".join("ab"[x] for x in reversed(E))
        out[w] = out.get(w, 0) + c
    return NCPoly(out)


def complete_ab_index(sys, order, u, v) -> NCPoly:
    from .bruhat_graph import b_table

    if not sys.bruhat_leq(u, v) or u == v:
        raise ValueError("the complete cd-index needs u < v")
    return path_polynomial(b_table(sys, order, u, v))


def complete_cd_index(sys, order, u, v) -> CdPoly:
    return to_cd(complete_ab_index(sys, order, u, v))


def cd_index_from_h(h: Mapping[Word, int]) -> CdPoly:
    """Ordinary cd-index from a flag h-vector: sum of h_E mu_E."""
    out: dict[str, int] = {}
    for E, c in h.items():
        w = "".join("ab"[x] for x in E)
        out[w] = out.get(w, 0) + c
    return to_cd(NCPoly(out))


def as_fraction_vector(P: CdPoly, n: int) -> list[Fraction]:
    return [Fraction(P.terms.get(w, 0)) for w in cd_monomials(n)]
