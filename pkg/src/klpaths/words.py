"""
Binary words (elements of the free monoid on {0, 1}).

A word is a plain tuple of ints, ``()`` being the empty word.  Everything
in the package that is indexed by descent strings, rank sets or lattice
path sign patterns uses this representation.

>>> parse("00100")
(0, 0, 1, 0, 0)
>>> is_sparse(parse("0101")), is_sparse(parse("0110"))
(True, False)
>>> boundary(parse("00110"))
[2, 4, 5]
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

Word = tuple[int, ...]


def parse(bits: str) -> Word:
    """Read a word from a string of 0s and 1s (whitespace ignored)."""
    bits = "".join(bits.split())
    if any(ch not in "01" for ch in bits):
        raise ValueError(f"not a binary word: {bits!r}")
    return tuple(int(ch) for ch in bits)


def fmt(word: Word) -> str:
    return "".join(str(b) for b in word)


def complement(word: Word) -> Word:
    return tuple(1 - b for b in word)


def opposite(word: Word) -> Word:
    return word[::-1]


def check(word: Word) -> Word:
    """Flip the last letter; the empty word is fixed."""
    if not word:
        return word
    return word[:-1] + (1 - word[-1],)


def support(word: Word) -> list[int]:
    """S(E): the 1-based positions holding a 1."""
    return [i for i, b in enumerate(word, 1) if b]


def count(word: Word, letter: int) -> int:
    return sum(1 for b in word if b == letter)


def leq(e: Word, f: Word) -> bool:
    """E <= F iff S(E) is contained in S(F)."""
    return len(e) == len(f) and all(a <= b for a, b in zip(e, f))


def e_ij(i: int, j: int) -> Word:
    """0^(i-1) 1 0^(j-i); ``e_ij(0, j)`` is 0^j."""
    if i == 0:
        return (0,) * j
    return (0,) * (i - 1) + (1,) + (0,) * (j - i)


def is_sparse(word: Word) -> bool:
    if word and word[0] == 1:
        return False
    return all(not (a and b) for a, b in zip(word, word[1:]))


def boundary(word: Word) -> list[int]:
    """
    The set d(E) = {i in [n-2] : E_i != E_(i+1)} u {n-1} for E of length n-1,
    returned sorted.  For the empty word this is [0].
    """
    m = len(word)
    out = [i for i in range(1, m) if word[i - 1] != word[i]]
    out.append(m)
    return out


def exponent_composition(word: Word) -> tuple[int, ...]:
    """Lengths of the maximal constant runs of ``word``."""
    if not word:
        return ()
    pts = boundary(word)
    return tuple(b - a for a, b in zip([0] + pts, pts))


def oc(word: Word) -> tuple[int, ...]:
    """Composition of n = len+1 indexing M_E: (n - s_t, ..., s_2 - s_1, s_1)."""
    n = len(word) + 1
    pts = [0] + support(word) + [n]
    return tuple(b - a for a, b in zip(pts, pts[1:]))[::-1]


def words(n: int) -> Iterator[Word]:
    """All words of length n in lexicographic order."""
    return product((0, 1), repeat=n)


@lru_cache(maxsize=None)
def sparse_words(n: int) -> tuple[Word, ...]:
    """All sparse words of length n, lexicographically."""
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    out = [w + (0,) for w in sparse_words(n - 1)]
    out += [w + (0, 1) for w in sparse_words(n - 2)]
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    """Fibonacci numbers with f_0 = 0, f_1 = 1."""
    if n < 2:
        return n
    return fib(n - 1) + fib(n - 2)
