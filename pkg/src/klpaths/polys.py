"""
Exact integer polynomials in q, and Laurent polynomials in q^(1/2).

Both print with explicit coefficients and ascending exponents, e.g.
``-1*q + 2*q^2`` and ``1*q^(-1/2) - 1*q^(1/2)``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


def _join(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for k, (c, mono) in enumerate(terms):
        body = str(abs(c)) if not mono else f"{abs(c)}*{mono}"
        if k == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


class QPoly:
    """Polynomial in q with integer coefficients, stored ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> "QPoly":
        if not terms:
            return cls()
        if min(terms) < 0:
            raise ValueError("negative exponent in QPoly")
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(c)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls.from_dict({exp: coeff})

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            other = QPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: "QPoly") -> "QPoly":
        if isinstance(other, int):
            other = QPoly([other])
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly(other * c for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("use HalfLaurent for negative shifts")
        return QPoly((0,) * k + self.coeffs) if self.coeffs else QPoly()

    def reciprocal(self, n: int) -> "QPoly":
        """q^n P(1/q); requires n >= deg P."""
        if self.degree > n:
            raise ValueError(f"q^{n} P(1/q) is not a polynomial")
        return QPoly.from_dict({n - i: c for i, c in enumerate(self.coeffs) if c})

    def truncate(self, max_degree: int) -> "QPoly":
        return QPoly(self.coeffs[: max_degree + 1])

    def __call__(self, x):
        return sum(c * x**i for i, c in enumerate(self.coeffs))

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append((c, "" if i == 0 else ("q" if i == 1 else f"q^{i}")))
        return _join(terms)

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"


class HalfLaurent:
    """Laurent polynomial in q^(1/2); keys are doubled exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict[int, int] = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_qpoly(cls, p: QPoly, half_shift: int = 0) -> "HalfLaurent":
        """q^(half_shift/2) * p."""
        return cls({2 * i + half_shift: c for i, c in enumerate(p.coeffs) if c})

    def __add__(self, other: "HalfLaurent") -> "HalfLaurent":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return HalfLaurent(out)

    def __neg__(self):
        return HalfLaurent({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfLaurent({k: other * v for k, v in self.terms.items()})
        out: dict[int, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return HalfLaurent(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, HalfLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        terms = []
        for k in sorted(self.terms):
            if k == 0:
                mono = ""
            elif k % 2 == 0:
                mono = "q" if k == 2 else f"q^{k // 2}"
            else:
                mono = f"q^({k}/2)"
            terms.append((self.terms[k], mono))
        return _join(terms)

    def __repr__(self):
        return f"HalfLaurent({self.terms})"
