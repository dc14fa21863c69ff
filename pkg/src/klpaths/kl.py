"""
Kazhdan-Lusztig polynomials, two independent ways.

``ClassicalKL`` is the textbook route through R-polynomials and is used as the
oracle.  ``kl_slalom`` sums path counts against slalom polynomials and never
touches the oracle.
"""

from __future__ import annotations

from typing import Mapping

from .bruhat_graph import b_table, interval
from .coxeter import CoxElem, CoxeterError, CoxSystem
from .lattice import omega, upsilon
from .polys import HalfLaurent, QPoly
from .qsym import QSymSlice, convert
from .reflection_order import RefOrder, height_order
from .words import is_sparse

_Q = QPoly([0, 1])
_QM1 = QPoly([-1, 1])


class ClassicalKL:
    """R- and P-polynomials with memo tables keyed by element matrices."""

    def __init__(self, sys: CoxSystem, side: str = "right"):
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        self.sys = sys
        self.side = side
        self._R: dict = {}
        self._P: dict = {}

    def R(self, u: CoxElem, v: CoxElem) -> QPoly:
        key = (u.mat, v.mat)
        hit = self._R.get(key)
        if hit is not None:
            return hit
        sys = self.sys
        if not sys.bruhat_leq(u, v):
            res = QPoly()
        elif u == v:
            res = QPoly([1])
        else:
            if self.side == "right":
                s = max(sys.descents(v, "right"))
                mul = lambda w: sys.from_word(w.word + (s,))  # noqa: E731
                in_u = s in sys.descents(u, "right")
            else:
                s = max(sys.descents(v, "left"))
                mul = lambda w: sys.from_word((s,) + w.word)  # noqa: E731
                in_u = s in sys.descents(u, "left")
            us, vs = mul(u), mul(v)
            if in_u:
                res = self.R(us, vs)
            else:
                res = _QM1 * self.R(u, vs) + _Q * self.R(us, vs)
        self._R[key] = res
        return res

    def P(self, u: CoxElem, v: CoxElem) -> QPoly:
        key = (u.mat, v.mat)
        hit = self._P.get(key)
        if hit is not None:
            return hit
        if not self.sys.bruhat_leq(u, v):
            raise CoxeterError(f"{u!r} is not below {v!r}")
        iv = interval(self.sys, u, v)
        # fill P_{z,v} from the top of the interval down
        for z in reversed(iv.elements):
            zkey = (z.mat, v.mat)
            if zkey in self._P:
                continue
            if z == v:
                self._P[zkey] = QPoly([1])
                continue
            ell = len(v) - len(z)
            rhs = QPoly()
            for y in iv.elements:
                if len(y) > len(z) and self.sys.bruhat_leq(z, y):
                    rhs = rhs + self.R(z, y) * self._P[(y.mat, v.mat)]
            p = -rhs.truncate((ell - 1) // 2)
            if p.reciprocal(ell) - p != rhs:
                raise RuntimeError(f"KL recursion is inconsistent at {z!r}, {v!r}")
            self._P[zkey] = p
        return self._P[key]


def kl_classical(sys: CoxSystem, u: CoxElem, v: CoxElem, side: str = "right") -> QPoly:
    cache = sys._cache.setdefault(f"kl_{side}", ClassicalKL(sys, side))
    return cache.P(u, v)


def kl_slalom(sys: CoxSystem, u: CoxElem, v: CoxElem, order: RefOrder | None = None) -> QPoly:
    """Sum over sparse T of b(u,v)_T q^((l - |T| - 1)/2) Omega_T."""
    if not sys.bruhat_leq(u, v):
        raise CoxeterError(f"{u!r} is not below {v!r}")
    if u == v:
        return QPoly([1])
    if order is None:
        order = height_order(sys)
    ell = len(v) - len(u)
    out = QPoly()
    for T, b in b_table(sys, order, u, v).items():
        if not is_sparse(T) or not b:
            continue
        half = ell - len(T) - 1
        if half % 2:
            raise RuntimeError(f"path count {b} at {T} would need a half-integer power of q")
        out = out + omega(T).shift(half // 2) * b
    return out


def kmap(F: QSymSlice | Mapping[int, QSymSlice | int]) -> HalfLaurent:
    """Linear map sending L_E to q^(-(|E|+1)/2) Upsilon_E."""
    if isinstance(F, QSymSlice):
        parts = {F.degree: F}
    else:
        parts = dict(F)
    out = HalfLaurent()
    for d, S in parts.items():
        if d == 0:
            out = out + HalfLaurent({0: int(S)})
            continue
        for E, c in convert(S, "L").coeffs.items():
            out = out + HalfLaurent.from_qpoly(upsilon(E), -(len(E) + 1)) * c
    return out


def bridge_rhs(P: QPoly, ell: int) -> HalfLaurent:
    """q^(-l/2) P(q) - q^(l/2) P(1/q)."""
    lo = HalfLaurent.from_qpoly(P, -ell)
    hi = HalfLaurent({ell - 2 * i: c for i, c in enumerate(P.coeffs) if c})
    return lo - hi
