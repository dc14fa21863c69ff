"""
Homogeneous slices of quasisymmetric functions, stored as coefficient maps.

A slice of degree n is indexed by binary words of length n - 1 in either the
monomial basis M or the fundamental basis L, where L_F is the sum of M_E over
E >= F.  Peak membership is tested by the linear relations in either basis;
the signed family D_T built here is a basis of the peak functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Union

from . import words as W
from .words import Word

Number = Union[int, Fraction]


class NotPeak(ValueError):
    def __init__(self, witness):
        super().__init__(f"not a peak function; first violated relation at {witness}")
        self.witness = witness


@dataclass(frozen=True)
class QSymSlice:
    degree: int
    basis: str = "L"
    coeffs: Mapping[Word, Number] = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("slices have degree >= 1; the constant term is kept separately")
        if self.basis not in ("L", "M"):
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for E, c in self.coeffs.items():
            E = tuple(E)
            if len(E) != self.degree - 1:
                raise ValueError(f"word {W.fmt(E)} does not index degree {self.degree}")
            if c:
                clean[E] = clean.get(E, 0) + c
        object.__setattr__(self, "coeffs", {E: c for E, c in sorted(clean.items()) if c})

    def __getitem__(self, E: Word) -> Number:
        return self.coeffs.get(tuple(E), 0)

    def __eq__(self, other):
        if not isinstance(other, QSymSlice) or other.degree != self.degree:
            return NotImplemented
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return self.coeffs == other.coeffs

    def __add__(self, other: "QSymSlice") -> "QSymSlice":
        if other.basis != self.basis:
            other = convert(other, self.basis)
        out = dict(self.coeffs)
        for E, c in other.coeffs.items():
            out[E] = out.get(E, 0) + c
        return QSymSlice(self.degree, self.basis, out)

    def scale(self, k: Number) -> "QSymSlice":
        return QSymSlice(self.degree, self.basis, {E: k * c for E, c in self.coeffs.items()})

    def full(self) -> dict[Word, Number]:
        """Coefficients on every word of the slice, zeros included."""
        return {E: self.coeffs.get(E, 0) for E in W.words(self.degree - 1)}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for E, c in self.coeffs.items():
            sgn = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"{self.basis}_{W.fmt(E) or 'e'}" if mag == 1 else f"{mag}*{self.basis}_{W.fmt(E) or 'e'}"
            parts.append((sgn, body))
        first = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return first + "".join(f" {s} {b}" for s, b in parts[1:])


def convert(F: QSymSlice, target: str) -> QSymSlice:
    """Zeta (L -> M) or Moebius (M -> L) transform on the Boolean lattice."""
    if target == F.basis:
        return F
    m = F.degree - 1
    vals = F.full()
    if target == "M":
        out = _zeta(vals, m)
    elif target == "L":
        out = _moebius(vals, m)
    else:
        raise ValueError(f"unknown basis {target!r}")
    return QSymSlice(F.degree, target, out)


def _zeta(vals: Mapping[Word, Number], m: int) -> dict[Word, Number]:
    """out_E = sum of vals_F over F <= E (fast subset-sum transform)."""
    cur = dict(vals)
    for i in range(m):
        for E in W.words(m):
            if E[i] == 1:
                cur[E] = cur[E] + cur[E[:i] + (0,) + E[i + 1:]]
    return cur


def _moebius(vals: Mapping[Word, Number], m: int) -> dict[Word, Number]:
    cur = dict(vals)
    for i in range(m):
        for E in W.words(m):
            if E[i] == 1:
                cur[E] = cur[E] - cur[E[:i] + (0,) + E[i + 1:]]
    return cur


# -- the two families of peak relations -------------------------------------


def dual_relations(m: int) -> Iterator[tuple[Word, Word]]:
    """All (E, F) with |E| + |F| = m and F nonempty (F empty is an identity)."""
    for k in range(m):
        for E in W.words(k):
            for F in W.words(m - k):
                yield E, F


def dual_relation_violation(beta: Mapping[Word, Number], m: int) -> tuple[Word, Word] | None:
    """First (E, F) with b(EF) + b(E'F) != b(E Fbar) + b(E' Fbar), E' = E with last letter flipped."""
    g = lambda w: beta.get(w, 0)  # noqa: E731
    for E, F in dual_relations(m):
        Ec, Fb = W.check(E), W.complement(F)
        if g(E + F) + g(Ec + F) != g(E + Fb) + g(Ec + Fb):
            return E, F
    return None


def bb_relations(m: int) -> Iterator[tuple[Word, Word, int]]:
    """(E, F, j) with E empty or ending in 1, F empty or starting with 1."""
    for j in range(1, m + 1):
        for k in range(m - j + 1):
            for E in W.words(k):
                if E and E[-1] != 1:
                    continue
                for F in W.words(m - j - k):
                    if F and F[0] != 1:
                        continue
                    yield E, F, j


def bb_relation_violation(alpha: Mapping[Word, Number], m: int) -> tuple[Word, Word, int] | None:
    g = lambda w: alpha.get(w, 0)  # noqa: E731
    for E, F, j in bb_relations(m):
        lhs = sum((-1) ** (i - 1) * g(E + W.e_ij(i, j) + F) for i in range(1, j + 1))
        rhs = 2 * (j % 2) * g(E + (0,) * j + F)
        if lhs != rhs:
            return E, F, j
    return None


@dataclass(frozen=True)
class PeakResult:
    ok: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def is_peak(F: QSymSlice) -> PeakResult:
    """
    Test peak membership in the slice's own basis, then convert and test again
    in the other basis; the two verdicts must agree.
    """
    m = F.degree - 1
    L = convert(F, "L")
    M = convert(F, "M")
    wl = dual_relation_violation(L.coeffs, m)
    wm = bb_relation_violation(M.coeffs, m)
    if (wl is None) != (wm is None):
        raise RuntimeError(f"peak tests disagree: L-form {wl}, M-form {wm}")
    first = wl if F.basis == "L" else wm
    return PeakResult(first is None, first)


def is_peak_graded(parts: Mapping[int, QSymSlice]) -> PeakResult:
    for d in sorted(parts):
        if d == 0:
            continue
        res = is_peak(parts[d])
        if not res:
            return PeakResult(False, (d,) + tuple(res.witness))
    return PeakResult(True)


# -- the D_T family ---------------------------------------------------------


def _blocks(T: Word) -> tuple[list[int], int]:
    """s_0 = 0, s_1 < ... < s_t, s_(t+1) = n for a word T of length n - 1."""
    n = len(T) + 1
    return [0] + W.support(T) + [n], n


def g_set(T: Word) -> list[tuple[Word, int]]:
    """All E in G(T) with their signs."""
    s, n = _blocks(T)
    t = len(s) - 2
    out = []
    for E in W.words(n - 1):
        bd = W.boundary(E)
        ok = True
        exponent = 0
        for j in range(t + 1):
            inside = [y for y in bd if s[j] < y < s[j + 1]]
            if j < t and not inside:
                ok = False
                break
            if len({y % 2 for y in inside}) > 1:
                ok = False
                break
            if j < t:
                # any representative gives the same parity; check it anyway
                pars = {(s[j + 1] - y - 1) % 2 for y in inside}
                assert len(pars) == 1
                exponent += s[j + 1] - inside[0] - 1
        if ok:
            out.append((E, -1 if exponent % 2 else 1))
    return out


def d_basis(T: Word) -> QSymSlice:
    """D_T as a slice in the L basis (zero when T is not sparse)."""
    return QSymSlice(len(T) + 1, "L", dict(g_set(T)))


def expand_in_d(F: QSymSlice) -> dict[Word, Number]:
    """Coefficients h_T with F = sum h_T D_T; read off at the sparse words."""
    res = is_peak(F)
    if not res:
        raise NotPeak(res.witness)
    L = convert(F, "L")
    return {T: L[T] for T in W.sparse_words(F.degree - 1) if L[T]}


def from_d_expansion(degree: int, coeffs: Mapping[Word, Number]) -> QSymSlice:
    out = QSymSlice(degree, "L", {})
    for T, h in coeffs.items():
        out = out + d_basis(T).scale(h)
    return out


def f_tilde(sys, order, u, v) -> dict[int, QSymSlice | int]:
    """
    The graded pieces of sum b(u,v)_E L_E, keyed by degree.  For u = v this is
    the constant 1, stored under degree 0.
    """
    from .bruhat_graph import b_table

    if u == v:
        return {0: 1}
    by_deg: dict[int, dict[Word, int]] = {}
    for E, c in b_table(sys, order, u, v).items():
        by_deg.setdefault(len(E) + 1, {})[E] = c
    return {d: QSymSlice(d, "L", cs) for d, cs in sorted(by_deg.items())}


# -- identities that hold on the dual-relation subspace ---------------------


def solving_ones_violations(beta: Mapping[Word, Number], m: int, max_j: int = 4) -> list[tuple]:
    """
    Check the expansion of b(E 1^j F) in terms of words with fewer ones,
    for every split E 1^j F of length m with j <= max_j.
    """
    g = lambda w: beta.get(w, 0)  # noqa: E731
    bad = []
    for j in range(1, min(max_j, m) + 1):
        for k in range(m - j + 1):
            for E in W.words(k):
                for F in W.words(m - j - k):
                    Fb = W.complement(F)
                    rhs = sum((-1) ** (i - 1) * g(E + W.e_ij(i, j) + Fb) for i in range(1, j))
                    rhs += (-1) ** (j - 1) * g(E + W.e_ij(j, j) + F)
                    rhs += (1 - j % 2) * g(E + (0,) * j + Fb)
                    if g(E + (1,) * j + F) != rhs:
                        bad.append((E, j, F))
    return bad


def relga_violations(beta: Mapping[Word, Number], m: int) -> list[tuple]:
    """
    sum over F' <= F of b(E F') equals the same sum of b(E F'bar), for F empty
    or starting with 1; and the mirror statement with E empty or ending in 1.
    """
    g = lambda w: beta.get(w, 0)  # noqa: E731
    bad = []
    for k in range(m + 1):
        for E in W.words(k):
            for F in W.words(m - k):
                if F and F[0] == 1:
                    below = [G for G in W.words(len(F)) if W.leq(G, F)]
                    if sum(g(E + G) for G in below) != sum(g(E + W.complement(G)) for G in below):
                        bad.append(("right", E, F))
                if E and E[-1] == 1:
                    below = [G for G in W.words(len(E)) if W.leq(G, E)]
                    if sum(g(G + F) for G in below) != sum(g(W.complement(G) + F) for G in below):
                        bad.append(("left", E, F))
    return bad
