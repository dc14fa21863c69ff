"""
Bruhat intervals, paths in the Bruhat graph and their descent statistics.

Edges are labelled on the right: x -> x t with t a reflection and
l(x t) > l(x).  The down-edges out of y are exactly y t_j where t_j is the
reflection obtained by deleting the j-th letter of a reduced word of y, and
its root is s_{i_k} ... s_{i_{j+1}}(alpha_{i_j}).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxElem, CoxeterError, CoxSystem, Root
from .reflection_order import RefOrder
from .words import Word, leq, words


def down_edges(sys: CoxSystem, y: CoxElem) -> list[tuple[CoxElem, Root]]:
    """All (y t, root of t) with l(y t) < l(y), one per right inversion of y."""
    cache = sys._cache["down"]
    hit = cache.get(y.mat)
    if hit is not None:
        return hit
    word = y.word
    out = []
    for j in range(len(word)):
        beta = sys.simple_root(word[j])
        for i in word[j + 1:]:
            beta = sys.reflect(i, beta)
        out.append((sys.from_word(word[:j] + word[j + 1:]), beta))
    cache[y.mat] = out
    return out


class Interval:
    """The Bruhat interval [u, v] together with its Bruhat graph."""

    def __init__(self, sys: CoxSystem, u: CoxElem, v: CoxElem):
        if not sys.bruhat_leq(u, v):
            raise CoxeterError(f"{u!r} is not below {v!r}")
        self.sys, self.u, self.v = sys, u, v
        self.length = len(v) - len(u)
        # BFS downwards from v through the whole Bruhat graph, keeping only z >= u
        up: dict[CoxElem, list[tuple[CoxElem, Root]]] = {v: []}
        frontier = [v]
        while frontier:
            nxt = []
            for y in frontier:
                for x, beta in down_edges(sys, y):
                    if len(x) < len(u) or not sys.bruhat_leq(u, x):
                        continue
                    if x not in up:
                        up[x] = []
                        nxt.append(x)
                    up[x].append((y, beta))
            frontier = nxt
        self.elements = sorted(up, key=lambda z: (len(z), z.word))
        self.up = up

    def __len__(self):
        return len(self.elements)

    def __contains__(self, z: CoxElem):
        return z in self.up

    def rank(self, z: CoxElem) -> int:
        return len(z) - len(self.u)

    def open_elements(self) -> list[CoxElem]:
        return [z for z in self.elements if z != self.u and z != self.v]

    def labels(self) -> set[Root]:
        return {beta for edges in self.up.values() for _, beta in edges}


def interval(sys: CoxSystem, u: CoxElem, v: CoxElem) -> Interval:
    cache = sys._cache.setdefault("intervals", {})
    key = (u.mat, v.mat)
    hit = cache.get(key)
    if hit is None:
        hit = Interval(sys, u, v)
        cache[key] = hit
    return hit


@dataclass(frozen=True)
class BruhatPath:
    vertices: tuple[CoxElem, ...]
    labels: tuple[Root, ...]

    def __len__(self):
        return len(self.labels)


def paths(sys: CoxSystem, u: CoxElem, v: CoxElem, k: int | None = None) -> list[BruhatPath]:
    """Directed paths from u to v (of length k, or all lengths)."""
    iv = interval(sys, u, v)
    out: list[BruhatPath] = []

    def dfs(x, verts, labs):
        if x == v:
            if k is None or len(labs) == k:
                out.append(BruhatPath(tuple(verts), tuple(labs)))
            return
        if k is not None and len(labs) >= k:
            return
        for y, beta in iv.up[x]:
            verts.append(y)
            labs.append(beta)
            dfs(y, verts, labs)
            verts.pop()
            labs.pop()

    dfs(u, [u], [])
    return out


def descent_string(order: RefOrder, path: BruhatPath) -> Word:
    """
    Position r - i is 1 iff the i-th label follows the (i+1)-th one.
    Equivalently, the reverse of the left-to-right comparison bits.
    """
    if len(path) < 1:
        raise ValueError("descent strings need a path of length >= 1")
    keys = [order.key(b) for b in path.labels]
    forward = tuple(int(a > b) for a, b in zip(keys, keys[1:]))
    return forward[::-1]


def forward_counts(order: RefOrder, iv: Interval) -> dict[Word, int]:
    """
    Number of paths u -> v by their left-to-right comparison bits
    (bit i is 1 iff t_i follows t_(i+1)).  Paths of length >= 1 only.
    """
    labels = sorted(iv.labels(), key=order.key)
    rank = {b: i for i, b in enumerate(labels)}
    # state: (rank of last label, bits so far) -> number of partial paths
    states: dict[CoxElem, dict[tuple[int, Word], int]] = {z: {} for z in iv.elements}
    out: dict[Word, int] = {}
    for x in iv.elements:
        here = states[x]
        for y, beta in iv.up[x]:
            r = rank[beta]
            there = states[y]
            if x == iv.u:
                there[(r, ())] = there.get((r, ()), 0) + 1
                continue
            for (last, bits), cnt in here.items():
                key = (r, bits + (int(last > r),))
                there[key] = there.get(key, 0) + cnt
        if x != iv.v:
            here.clear()
    for (_, bits), cnt in states[iv.v].items():
        out[bits] = out.get(bits, 0) + cnt
    return out


def b_table(sys: CoxSystem, order: RefOrder, u: CoxElem, v: CoxElem) -> dict[Word, int]:
    """All nonzero b(u,v)_E, every path length at once."""
    if u == v:
        return {}
    return {bits[::-1]: c for bits, c in forward_counts(order, interval(sys, u, v)).items()}


def b_counts(sys: CoxSystem, order: RefOrder, u: CoxElem, v: CoxElem, k: int) -> dict[Word, int]:
    """b(u,v)_E for every E of length k - 1 (zeros included)."""
    if k < 1:
        raise ValueError("path length must be >= 1")
    table = b_table(sys, order, u, v)
    return {E: table.get(E, 0) for E in words(k - 1)}


def c_counts(b: dict[Word, int]) -> dict[Word, int]:
    """c_E = sum of b_F over F <= E, for the words of one fixed length."""
    return {E: sum(c for F, c in b.items() if leq(F, E)) for E in b}


def comparability(iv: Interval) -> dict[tuple[CoxElem, CoxElem], bool]:
    sys = iv.sys
    return {(x, y): sys.bruhat_leq(x, y) for x in iv.elements for y in iv.elements}


def flag_vectors(iv: Interval) -> tuple[dict[Word, int], dict[Word, int]]:
    """
    Flag f- and h-vectors of [u, v], indexed by words of length rank - 1.
    Chains exclude the two endpoints.
    """
    n = iv.length - 1
    if n < 0:
        raise ValueError("flag vectors need u < v")
    by_rank: dict[int, list[CoxElem]] = {}
    for z in iv.open_elements():
        by_rank.setdefault(iv.rank(z), []).append(z)
    leq_ = comparability(iv)
    f: dict[Word, int] = {}
    for E in words(n):
        ranks = [i for i, bit in enumerate(E, 1) if bit]
        counts = {z: 1 for z in by_rank.get(ranks[0], [])} if ranks else None
        if counts is None:
            f[E] = 1
            continue
        for r in ranks[1:]:
            counts = {y: sum(c for x, c in counts.items() if leq_[(x, y)]) for y in by_rank.get(r, [])}
        f[E] = sum(counts.values())
    return f, f_to_h(f)


def f_to_h(f: dict[Word, int]) -> dict[Word, int]:
    return {F: sum((-1) ** (sum(F) - sum(E)) * c for E, c in f.items() if leq(E, F)) for F in f}


def h_to_f(h: dict[Word, int]) -> dict[Word, int]:
    return {F: sum(c for E, c in h.items() if leq(E, F)) for F in h}

