"""
Crystallographic Coxeter systems in their integral geometric representation.

Elements are stored as integer matrices acting on simple-root coordinates
(column j is w(alpha_j)) together with their inverse and a reduced word in
normal form.  Generators are 0-based internally; the CLI and file formats
use 1-based indices.

Only Coxeter matrix entries 2, 3, 4, 6 and infinity are accepted: these are
exactly the ones realised by a generalized Cartan matrix, so every root has
integer coordinates and no irrational arithmetic is ever needed.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

INF = math.inf

Matrix = tuple[tuple[int, ...], ...]  # tuple of columns
Root = tuple[int, ...]

# m -> (A[i][j], A[j][i]) for i < j
_CARTAN_PAIRS = {2: (0, 0), 3: (-1, -1), 4: (-2, -1), 6: (-3, -1), INF: (-2, -2)}


class CoxeterError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CoxElem:
    """A group element.  Equality and hashing go through the matrix only."""

    mat: Matrix
    inv: Matrix
    word: tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, CoxElem) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        w = "".join(f"s{i + 1}" for i in self.word) or "e"
        return f"<{w}>"


def _is_negative(v: Sequence[int]) -> bool:
    return all(x <= 0 for x in v) and any(x < 0 for x in v)


def _is_positive(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v) and any(x > 0 for x in v)


@dataclass(frozen=True, eq=False)
class CoxSystem:
    """
    A Coxeter system given by its Coxeter matrix.  ``cartan[i][j]`` is the
    pairing <alpha_i^vee, alpha_j>, so s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i.
    """

    coxeter_matrix: tuple[tuple[float, ...], ...]
    name: str = ""
    cartan: tuple[tuple[int, ...], ...] = field(init=False)
    _cache: dict = field(init=False, repr=False)

    def __post_init__(self):
        m = self.coxeter_matrix
        n = len(m)
        if n == 0:
            raise CoxeterError("rank must be positive")
        A = [[0] * n for _ in range(n)]
        for i in range(n):
            if len(m[i]) != n:
                raise CoxeterError("Coxeter matrix must be square")
            if m[i][i] != 1:
                raise CoxeterError("diagonal entries must be 1")
            A[i][i] = 2
            for j in range(i + 1, n):
                if m[i][j] != m[j][i]:
                    raise CoxeterError("Coxeter matrix must be symmetric")
                if m[i][j] not in _CARTAN_PAIRS:
                    raise CoxeterError(f"unsupported Coxeter matrix entry {m[i][j]}")
                A[i][j], A[j][i] = _CARTAN_PAIRS[m[i][j]]
        object.__setattr__(self, "cartan", tuple(tuple(r) for r in A))
        object.__setattr__(self, "_cache", {"elems": {}, "down": {}, "leq": {}, "refl": {}})

    def __eq__(self, other):
        return isinstance(other, CoxSystem) and self.coxeter_matrix == other.coxeter_matrix

    def __hash__(self):
        return hash(self.coxeter_matrix)

    def __repr__(self):
        return f"CoxSystem({self.name or self.rank})"

    @property
    def rank(self) -> int:
        return len(self.coxeter_matrix)

    # -- linear algebra on root coordinates -------------------------------

    def reflect(self, i: int, v: Sequence[int]) -> Root:
        """s_i applied to a vector of simple-root coordinates."""
        A = self.cartan[i]
        c = sum(A[k] * v[k] for k in range(self.rank))
        if c == 0:
            return tuple(v)
        out = list(v)
        out[i] -= c
        return tuple(out)

    def _right_gen(self, mat: Matrix, i: int) -> Matrix:
        """M * S_i: column j becomes col_j - A[i][j] col_i."""
        A = self.cartan[i]
        ci = mat[i]
        return tuple(
            col if A[j] == 0 else (tuple(-x for x in ci) if j == i else tuple(x - A[j] * y for x, y in zip(col, ci)))
            for j, col in enumerate(mat)
        )

    def _left_gen(self, mat: Matrix, i: int) -> Matrix:
        """S_i * M."""
        return tuple(self.reflect(i, col) for col in mat)

    @property
    def identity_matrix(self) -> Matrix:
        n = self.rank
        return tuple(tuple(int(i == j) for i in range(n)) for j in range(n))

    def apply(self, w: CoxElem, v: Sequence[int]) -> Root:
        """w(v) for a coordinate vector v."""
        out = [0] * self.rank
        for j, x in enumerate(v):
            if x:
                col = w.mat[j]
                for i in range(self.rank):
                    out[i] += x * col[i]
        return tuple(out)

    def simple_root(self, i: int) -> Root:
        return tuple(int(k == i) for k in range(self.rank))

    # -- elements ----------------------------------------------------------

    def _check_word(self, word: Iterable[int]) -> tuple[int, ...]:
        word = tuple(word)
        for i in word:
            if not (isinstance(i, int) and 0 <= i < self.rank):
                raise CoxeterError(f"generator index {i} out of range for rank {self.rank}")
        return word

    def _normal_form(self, mat: Matrix, inv: Matrix) -> tuple[int, ...]:
        # greedy extraction of the smallest left descent
        word = []
        while True:
            for i in range(self.rank):
                if _is_negative(inv[i]):
                    break
            else:
                return tuple(word)
            word.append(i)
            mat = self._left_gen(mat, i)
            inv = self._right_gen(inv, i)

    def _elem(self, mat: Matrix, inv: Matrix) -> CoxElem:
        cache = self._cache["elems"]
        hit = cache.get(mat)
        if hit is None:
            hit = CoxElem(mat, inv, self._normal_form(mat, inv))
            cache[mat] = hit
        return hit

    def from_word(self, word: Iterable[int]) -> CoxElem:
        """The product s_{i1} s_{i2} ... of a (0-based) generator word."""
        word = self._check_word(word)
        mat = inv = self.identity_matrix
        for i in word:
            mat = self._right_gen(mat, i)
        for i in reversed(word):
            inv = self._right_gen(inv, i)
        return self._elem(mat, inv)

    @property
    def identity(self) -> CoxElem:
        return self.from_word(())

    def gen(self, i: int) -> CoxElem:
        return self.from_word((i,))

    def multiply(self, *elems: CoxElem) -> CoxElem:
        word: list[int] = []
        for w in elems:
            word.extend(w.word)
        return self.from_word(word)

    def inverse(self, w: CoxElem) -> CoxElem:
        return self._elem(w.inv, w.mat)

    def length(self, w: CoxElem) -> int:
        return len(w.word)

    def descents(self, w: CoxElem, side: str = "left") -> set[int]:
        if side == "left":
            return {i for i in range(self.rank) if _is_negative(w.inv[i])}
        if side == "right":
            return {i for i in range(self.rank) if _is_negative(w.mat[i])}
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def bruhat_leq(self, u: CoxElem, v: CoxElem) -> bool:
        """u <= v, by the lifting property on the left descents of v."""
        if len(u.word) > len(v.word):
            return False
        memo = self._cache["leq"]
        key = (u.mat, v.mat)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not v.word:
            res = not u.word
        elif len(u.word) == len(v.word):
            res = u == v
        elif not u.word:
            res = True
        else:
            s = v.word[0]
            sv = self.from_word(v.word[1:])
            if _is_negative(u.inv[s]):
                res = self.bruhat_leq(self.from_word((s,) + u.word), sv)
            else:
                res = self.bruhat_leq(u, sv)
        memo[key] = res
        return res

    # -- roots and reflections --------------------------------------------

    def root_to_simple(self, beta: Root) -> tuple[tuple[int, ...], int]:
        """
        Write a positive root as x(alpha_i); returns (word of x, i).
        Raises if ``beta`` is not a real root.
        """
        if not _is_positive(beta):
            raise CoxeterError(f"{beta} is not a positive vector")
        word: list[int] = []
        cur = tuple(beta)
        while True:
            if sum(cur) == 1:
                return tuple(word), cur.index(1)
            for i in range(self.rank):
                if cur[i] > 0:
                    nxt = self.reflect(i, cur)
                    if sum(nxt) < sum(cur):
                        break
            else:
                raise CoxeterError(f"{beta} is not a root")
            if not _is_positive(nxt):
                raise CoxeterError(f"{beta} is not a root")
            word.append(i)
            cur = nxt

    def reflection(self, beta: Root) -> CoxElem:
        """The reflection s_beta for a positive root beta."""
        cache = self._cache["refl"]
        hit = cache.get(beta)
        if hit is None:
            x, i = self.root_to_simple(beta)
            hit = self.from_word(x + (i,) + tuple(reversed(x)))
            cache[beta] = hit
        return hit

    def as_reflection(self, w: CoxElem) -> Root | None:
        """The positive root of w if w is a reflection, else None."""
        if not w.word or len(w.word) % 2 == 0 or w.mat != w.inv:
            return None
        n = self.rank
        diff = [tuple(col[i] - int(i == j) for i in range(n)) for j, col in enumerate(w.mat)]
        nonzero = [c for c in diff if any(c)]
        base = nonzero[0]
        for c in nonzero[1:]:
            # every column of M - I must be parallel to base
            if any(base[a] * c[b] != base[b] * c[a] for a in range(n) for b in range(n)):
                return None
        g = 0
        for x in base:
            g = math.gcd(g, abs(x))
        beta = tuple(x // g for x in base)
        if not _is_positive(beta):
            beta = tuple(-x for x in beta)
        if not _is_positive(beta):
            return None
        try:
            if self.reflection(beta) != w:
                return None
        except CoxeterError:
            return None
        return beta

    def elements_up_to(self, max_length: int, generators: Iterable[int] | None = None) -> list[CoxElem]:
        """BFS over elements of length <= max_length (optionally in a parabolic)."""
        gens = list(range(self.rank)) if generators is None else sorted(generators)
        layer = [self.identity]
        seen = {self.identity}
        out = [self.identity]
        for _ in range(max_length):
            nxt = []
            for w in layer:
                for i in gens:
                    if i in self.descents(w, "right"):
                        continue
                    ws = self.from_word(w.word + (i,))
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            out.extend(nxt)
            layer = nxt
            if not layer:
                break
        return out

    def positive_roots(self, max_height: int | None = None) -> list[Root]:
        """Positive roots (of height <= max_height for infinite groups)."""
        if max_height is None and not self.is_finite():
            raise CoxeterError("infinite root system; give max_height")
        found = {self.simple_root(i) for i in range(self.rank)}
        frontier = list(found)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(self.rank):
                    g = self.reflect(i, beta)
                    if _is_positive(g) and g not in found and (max_height is None or sum(g) <= max_height):
                        found.add(g)
                        nxt.append(g)
            frontier = nxt
        return sorted(found, key=lambda b: (sum(b), b))

    def is_finite(self) -> bool:
        """Positive-definiteness of the symmetrised bilinear form."""
        n = self.rank
        B = [[-math.cos(math.pi / self.coxeter_matrix[i][j]) if self.coxeter_matrix[i][j] != INF else -1.0
              for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            if _det([row[:k] for row in B[:k]]) <= 1e-12:
                return False
        return True

    def parse_word(self, text: str) -> CoxElem:
        """Element from a whitespace/comma separated 1-based word ('' is e)."""
        toks = [t for t in re.split(r"[\s,]+", text.strip()) if t]
        try:
            idx = [int(t) - 1 for t in toks]
        except ValueError:
            raise CoxeterError(f"invalid word {text!r}") from None
        bad = [i + 1 for i in idx if not 0 <= i < self.rank]
        if bad:
            raise CoxeterError(f"generator {bad[0]} out of range 1..{self.rank}")
        return self.from_word(idx)


def _det(M: list[list[float]]) -> float:
    M = [row[:] for row in M]
    n = len(M)
    det = 1.0
    for c in range(n):
        p = max(range(c, n), key=lambda r: abs(M[r][c]))
        if abs(M[p][c]) < 1e-15:
            return 0.0
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            for k in range(c, n):
                M[r][k] -= f * M[c][k]
    return det


# -- constructors ---------------------------------------------------------


def coxeter_system(matrix: Sequence[Sequence[float]], name: str = "") -> CoxSystem:
    return CoxSystem(tuple(tuple(INF if x == INF else int(x) for x in row) for row in matrix), name)


def type_a(n: int) -> CoxSystem:
    m = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
    return coxeter_system(m, f"A{n}")


def type_b(n: int) -> CoxSystem:
    """B_n with m(s1, s2) = 4 and a chain of 3s after that."""
    m = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
    if n >= 2:
        m[0][1] = m[1][0] = 4
    return coxeter_system(m, f"B{n}")


def three_complete(n: int) -> CoxSystem:
    """The rank-n Coxeter system with m(s, s') = 3 for all s != s'."""
    m = [[1 if i == j else 3 for j in range(n)] for i in range(n)]
    return coxeter_system(m, f"K{n}")


def parse_matrix_text(text: str) -> CoxSystem:
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    try:
        n = int(lines[0][0])
        rows = [[INF if tok.lower() in ("inf", "infinity") else int(tok) for tok in ln] for ln in lines[1:]]
    except (ValueError, IndexError):
        raise CoxeterError("malformed Coxeter matrix file") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise CoxeterError(f"expected {n} rows of {n} entries")
    return coxeter_system(rows)


def load_group(spec: str) -> CoxSystem:
    """A preset (A<n>, B<n>, K<n>) or the path of a Coxeter matrix file."""
    m = re.fullmatch(r"([ABK])(\d+)", spec.strip())
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise CoxeterError("rank must be positive")
        return {"A": type_a, "B": type_b, "K": three_complete}[kind](n)
    path = Path(spec)
    if not path.is_file():
        raise CoxeterError(f"unknown group {spec!r}")
    return parse_matrix_text(path.read_text())
