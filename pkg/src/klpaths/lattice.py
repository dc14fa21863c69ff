"""
Lattice paths and the polynomials built from them.

A path of length n is stored as its height sequence (G(0), ..., G(n)) with
G(0) = 0 and unit steps.  Its sign word N(G) has a 1 at position i in [n-1]
exactly when G(i) < 0.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

from . import words as W
from .polys import QPoly
from .words import Word

Path = tuple[int, ...]


def heights(steps: Iterable[int]) -> Path:
    out = [0]
    for s in steps:
        out.append(out[-1] + s)
    return tuple(out)


def step_string(path: Path) -> str:
    """'+-+' style dump of the steps."""
    return "".join("+" if b > a else "-" for a, b in zip(path, path[1:]))


@lru_cache(maxsize=None)
def all_paths(n: int) -> tuple[Path, ...]:
    return tuple(heights(st) for st in product((1, -1), repeat=n))


def sign_word(path: Path) -> Word:
    return tuple(int(h < 0) for h in path[1:-1])


def d_plus(path: Path) -> int:
    return (path[-1] + len(path) - 1) // 2


def d_minus(path: Path) -> int:
    return len(path) - 1 - d_plus(path)


def paths_with_signs(E: Word, extra=None) -> Iterator[Path]:
    """All paths of length len(E)+1 with sign word E; ``extra(i, h)`` may veto a height."""
    n = len(E) + 1

    def rec(path):
        i = len(path)
        if i == n + 1:
            yield tuple(path)
            return
        for step in (1, -1):
            h = path[-1] + step
            if i <= n - 1 and (h < 0) != bool(E[i - 1]):
                continue
            if extra is not None and not extra(i, h):
                continue
            path.append(h)
            yield from rec(path)
            path.pop()

    yield from rec([0])


def endpoint_counts(E: Word, extra=None) -> dict[int, int]:
    """Number of paths with sign word E by final height (dynamic programming)."""
    n = len(E) + 1
    cur = {0: 1}
    for i in range(1, n + 1):
        nxt: dict[int, int] = {}
        for h, c in cur.items():
            for h2 in (h + 1, h - 1):
                if i <= n - 1 and (h2 < 0) != bool(E[i - 1]):
                    continue
                if extra is not None and not extra(i, h2):
                    continue
                nxt[h2] = nxt.get(h2, 0) + c
        cur = nxt
    return cur


def upsilon(E: Word) -> QPoly:
    """(-1)^(zeros of E) times the sum of (-q)^(up-steps) over paths with sign word E."""
    n = len(E) + 1
    terms: dict[int, int] = {}
    for h, c in endpoint_counts(E).items():
        k = (h + n) // 2
        terms[k] = terms.get(k, 0) + c * (-1) ** k
    return QPoly.from_dict(terms) * (-1) ** W.count(E, 0)


# -- the index set J(T) ------------------------------------------------------


def _word_from_boundary(bd: list[int], first: int) -> Word:
    """The word whose runs end exactly at the positions in bd (last = length)."""
    out: list[int] = []
    bit = first
    prev = 0
    for x in bd:
        out.extend([bit] * (x - prev))
        bit = 1 - bit
        prev = x
    return tuple(out)


def j_set(T: Word) -> list[tuple[Word, int]]:
    """
    The set J(T) with signs.  Built constructively from the allowed
    boundary sets rather than by filtering every word.
    """
    if not T:
        return [((), 1)]
    if not W.is_sparse(T):
        return []
    m = len(T)
    n = m + 1
    s = [0] + W.support(T)
    t = len(s) - 1
    choices: list[list[list[int]]] = []
    for i in range(1, t + 1):
        choices.append([[x] for x in range(s[i - 1] + 1, s[i])])
    for i in range(1, t + 1):
        choices.append([[s[i]]] if s[i] == m else [[], [s[i]]])
    tail = list(range(s[t] + 1, n))
    if tail:
        # the last position is always a boundary; at most one more, of the same parity
        opts = [[m]] + [[x, m] for x in tail[:-1] if (m - x) % 2 == 0]
        choices.append(opts)
    out: dict[Word, int] = {}
    for pick in product(*choices):
        bd = sorted(x for part in pick for x in part)
        xs = [p[0] for p in pick[:t]]
        sign = -1 if sum(s[i] - xs[i - 1] - 1 for i in range(1, t + 1)) % 2 else 1
        for first in (0, 1):
            E = _word_from_boundary(bd, first)
            assert W.boundary(E) == bd
            out[E] = sign
    return sorted(out.items())


def j_set_bruteforce(T: Word) -> list[tuple[Word, int]]:
    """J(T) by testing conditions i)-iii) on every word (small lengths only)."""
    if not T:
        return [((), 1)]
    m = len(T)
    n = m + 1
    s = [0] + W.support(T) + [n]
    t = len(s) - 2
    out = []
    for E in W.words(m):
        bd = W.boundary(E)
        blocks = [[y for y in bd if s[j] < y < s[j + 1]] for j in range(t + 1)]
        if any(len(blocks[j]) != 1 for j in range(t)):
            continue
        last = blocks[t]
        if len(last) > 2:
            continue
        if len(last) == 2 and last[1] == n - 1 and (last[0] - (n - 1)) % 2:
            continue
        sign = -1 if sum(s[i] - blocks[i - 1][0] - 1 for i in range(1, t + 1)) % 2 else 1
        out.append((E, sign))
    return out


def omega_tilde(T: Word) -> QPoly:
    out = QPoly()
    for E, sgn in j_set(T):
        out = out + upsilon(E) * sgn
    return out


# -- path sets attached to a sparse word -------------------------------------


class SlalomData:
    """Path sets L(T), L0(T), L0'(T) and the statistics used on them."""

    def __init__(self, T: Word):
        if T and not W.is_sparse(T):
            raise ValueError(f"{W.fmt(T)} is not sparse")
        self.T = T
        self.n = len(T) + 1
        self.s = [0] + W.support(T)
        self.t = len(self.s) - 1
        self.r = [x + 1 for x in self.s]
        self.jset = dict(j_set(T))

    def _x(self, path: Path) -> list[int]:
        bd = W.boundary(sign_word(path))
        xs = []
        for h in range(1, self.t + 1):
            inside = [y for y in bd if self.s[h - 1] < y < self.s[h]]
            assert len(inside) == 1
            xs.append(inside[0])
        return xs

    def eps(self, path: Path) -> int:
        return sum(self.s[h] - x - 1 for h, x in enumerate(self._x(path), 1))

    @staticmethod
    def eta(path: Path) -> int:
        return W.count(sign_word(path), 0)

    def in_L(self, path: Path) -> bool:
        return sign_word(path) in self.jset

    def in_L0(self, path: Path) -> bool:
        return any(path[self.r[i]] == 0 for i in range(1, self.t + 1))

    def in_L0prime(self, path: Path) -> bool:
        return any(path[x] == 0 for x in range(self.r[self.t], self.n + 1))

    def in_Ltilde(self, path: Path) -> bool:
        if self.in_L0(path):
            return False
        return not (self.n % 2 == 0 and self.in_L0prime(path))

    def L(self) -> list[Path]:
        out = []
        for E in self.jset:
            out.extend(paths_with_signs(E))
        return sorted(out)

    def Ltilde(self) -> list[Path]:
        return [p for p in self.L() if self.in_Ltilde(p)]

    def _tilde_veto(self):
        rs = set(self.r[1:])
        tail = self.r[self.t] if self.n % 2 == 0 else None

        def ok(i, h):
            if h != 0:
                return True
            if i in rs:
                return False
            return not (tail is not None and i >= tail)

        return ok

    def ltilde_endpoints(self) -> dict[int, int]:
        """|{G in L~(T) : G(n) = h}| for each h, by dynamic programming."""
        veto = self._tilde_veto()
        out: dict[int, int] = {}
        for E in self.jset:
            for h, c in endpoint_counts(E, veto).items():
                out[h] = out.get(h, 0) + c
        return {h: c for h, c in out.items() if c}

    def signed_sum(self, paths: Iterable[Path]) -> QPoly:
        """Sum of (-1)^(eps + eta + d+) q^(d+)."""
        terms: dict[int, int] = {}
        for p in paths:
            k = d_plus(p)
            terms[k] = terms.get(k, 0) + (-1) ** (self.eps(p) + self.eta(p) + k)
        return QPoly.from_dict(terms)

    def parity_rhs(self, path: Path) -> int:
        """Right-hand side of the parity congruence for eps + eta on L~(T)."""
        return ((self.n - 1) * (path[-1] > 0) + sum(self.r[1:])) % 2

    def sign(self) -> int:
        return -1 if (sum(self.s[1:]) + self.t) % 2 else 1


def is_slalom_geometric(path: Path, T: Word) -> bool:
    """
    Direct test of the slalom conditions: avoid height 0 right after each 1 of
    T; cross height -1/2 exactly once over each window [s_(i-1)+1, s_i]; stay
    at height >= 1 (n even) or >= 0 (n odd) from abscissa s_t + 1 on.
    A crossing between abscissae k-1 and k sits at k - 1/2.
    """
    n = len(T) + 1
    if len(path) != n + 1:
        return False
    s = [0] + W.support(T)
    t = len(s) - 1
    for i in range(1, t + 1):
        if path[s[i] + 1] == 0:
            return False
    crossings = [k for k in range(1, n + 1) if {path[k - 1], path[k]} == {0, -1}]
    for i in range(1, t + 1):
        lo, hi = s[i - 1] + 1, s[i]
        if sum(1 for k in crossings if lo <= k - 0.5 <= hi) != 1:
            return False
    floor = 1 if n % 2 == 0 else 0
    return all(path[x] >= floor for x in range(s[t] + 1, n + 1))


def slaloms(T: Word, check: bool = True) -> list[Path]:
    """T-slaloms: paths of L~(T) ending above 0."""
    data = SlalomData(T)
    out = [p for p in data.Ltilde() if p[-1] > 0]
    if check:
        geo = [p for p in all_paths(data.n) if is_slalom_geometric(p, T)] if data.n <= 16 else None
        if geo is not None and sorted(geo) != out:
            raise RuntimeError(f"slalom predicates disagree for T={W.fmt(T)}")
    return out


@lru_cache(maxsize=None)
def omega(T: Word) -> QPoly:
    """(-1)^(s_1+...+s_t+t) times the sum of (-q)^(down-steps) over T-slaloms."""
    data = SlalomData(T)
    terms: dict[int, int] = {}
    for h, c in data.ltilde_endpoints().items():
        if h > 0:
            k = data.n - (h + data.n) // 2
            terms[k] = terms.get(k, 0) + c * (-1) ** k
    return QPoly.from_dict(terms) * data.sign()


def omega_from_paths(T: Word) -> QPoly:
    data = SlalomData(T)
    terms: dict[int, int] = {}
    for p in slaloms(T):
        k = d_minus(p)
        terms[k] = terms.get(k, 0) + (-1) ** k
    return QPoly.from_dict(terms) * data.sign()


def omega_tilde_from_counts(T: Word) -> QPoly:
    """Coefficients from signed endpoint counts over L~(T)."""
    data = SlalomData(T)
    n = data.n
    sr = sum(data.r[1:])
    terms: dict[int, int] = {}
    for h, c in data.ltilde_endpoints().items():
        i = (h + n) // 2
        terms[i] = terms.get(i, 0) + (-1) ** (i + sr + (n - 1) * (2 * i > n)) * c
    return QPoly.from_dict(terms)
