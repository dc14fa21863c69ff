"""Exact rational rank and linear solves (thin wrapper over sympy's DomainMatrix)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _dm(rows: Sequence[Sequence], ncols: int | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[QQ(int(Fraction(x).numerator), int(Fraction(x).denominator)) for x in r] for r in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return _dm(rows, ncols).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    basis = _dm(rows, ncols).nullspace().to_Matrix()
    return [[Fraction(int(x.p), int(x.q)) for x in basis.row(i)] for i in range(basis.rows)]


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """
    One solution of A x = b over Q, or None when the system is inconsistent.
    The system may be over-determined; free variables are set to zero.
    """
    ncols = len(rows[0])
    aug = _dm([list(r) + [b] for r, b in zip(rows, rhs)], ncols + 1)
    rref, pivots = aug.rref()
    if ncols in pivots:
        return None
    m = rref.to_Matrix()
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        v = m[i, ncols]
        x[p] = Fraction(int(v.p), int(v.q))
    return x
