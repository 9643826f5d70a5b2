"""Cyclic distance geometry on Z_n^d and independence in powers of C_{k,n}.

A word is a d-tuple of residues mod n. Two distinct words are adjacent in the
strong power C_{k,n}^d exactly when every coordinate is at cyclic distance
less than k, i.e. when their Chebyshev-style distance is below k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParameterError

MAX_D = 16

# Sentinel for the minimum distance of a one-word code.
INFINITY = math.inf

# Row block size for pairwise distance matrices; bounds peak memory.
_CHUNK = 512


def _check_nd(n: int, d: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError(f"modulus must be an integer >= 2, got {n!r}")
    if not isinstance(d, (int, np.integer)) or not 1 <= d <= MAX_D:
        raise ParameterError(f"length must be an integer in [1, {MAX_D}], got {d!r}")


@dataclass(frozen=True)
class Word:
    """A d-letter word over Z_n, letters kept in [0, n-1]."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        _check_nd(self.n, len(letters))
        for x in letters:
            if not 0 <= x < self.n:
                raise ParameterError(f"letter {x} outside [0, {self.n - 1}]")
        object.__setattr__(self, "letters", letters)

    @property
    def d(self) -> int:
        return len(self.letters)

    @classmethod
    def zero(cls, n: int, d: int) -> "Word":
        return cls((0,) * d, n)

    @classmethod
    def reduce(cls, letters: Iterable[int], n: int) -> "Word":
        """Build a word from arbitrary integers, reducing each mod n."""
        return cls(tuple(int(x) % n for x in letters), n)

    def __add__(self, other: "Word") -> "Word":
        _same_space(self, other)
        return Word(tuple((a + b) % self.n for a, b in zip(self.letters, other.letters)), self.n)

    def __neg__(self) -> "Word":
        return Word(tuple((-a) % self.n for a in self.letters), self.n)

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))


@dataclass(frozen=True)
class PowerParams:
    """Identifies the graph C_{k,n}^d."""

    k: int
    n: int
    d: int

    def __post_init__(self):
        _check_nd(self.n, self.d)
        if not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise ParameterError(f"k must be a positive integer, got {self.k!r}")
        if self.n < 2 * self.k:
            raise ParameterError(f"circular graph needs n >= 2k, got k={self.k}, n={self.n}")


@dataclass(frozen=True, eq=False)
class Code:
    """A set of words over Z_n^d stored in lexicographic order.

    Duplicates passed to the constructor are merged, since a code is a set.
    """

    n: int
    d: int
    words: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        _check_nd(self.n, self.d)
        norm = set()
        for w in self.words:
            letters = tuple(int(x) for x in (w.letters if isinstance(w, Word) else w))
            if isinstance(w, Word) and w.n != self.n:
                raise ParameterError(f"word over Z_{w.n} in a code over Z_{self.n}")
            if len(letters) != self.d:
                raise ParameterError(f"word {letters} has length {len(letters)}, expected {self.d}")
            for x in letters:
                if not 0 <= x < self.n:
                    raise ParameterError(f"letter {x} outside [0, {self.n - 1}]")
            norm.add(letters)
        object.__setattr__(self, "words", tuple(sorted(norm)))

    @classmethod
    def from_array(cls, n: int, arr) -> "Code":
        arr = np.asarray(arr, dtype=np.int64)
        if arr.ndim != 2:
            raise ParameterError("expected a 2-d array of letters")
        return cls(n, arr.shape[1], [tuple(row) for row in arr.tolist()])

    @cached_property
    def array(self) -> np.ndarray:
        """Letters as an int64 array of shape (len(code), d), rows in canonical order."""
        if not self.words:
            return np.zeros((0, self.d), dtype=np.int64)
        return np.array(self.words, dtype=np.int64)

    def __len__(self):
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return (Word(w, self.n) for w in self.words)

    def __contains__(self, item):
        letters = item.letters if isinstance(item, Word) else tuple(item)
        return letters in self._index

    @cached_property
    def _index(self) -> dict:
        return {w: i for i, w in enumerate(self.words)}

    def index(self, word) -> int:
        letters = word.letters if isinstance(word, Word) else tuple(word)
        return self._index[letters]

    def __eq__(self, other):
        if not isinstance(other, Code):
            return NotImplemented
        return (self.n, self.d, self.words) == (other.n, other.d, other.words)

    def __hash__(self):
        return hash((self.n, self.d, self.words))

    def __repr__(self):
        return f"Code(n={self.n}, d={self.d}, size={len(self)})"

    def union(self, words: Iterable) -> "Code":
        return Code(self.n, self.d, list(self.words) + list(words))

    def without(self, words: Iterable) -> "Code":
        drop = {w.letters if isinstance(w, Word) else tuple(w) for w in words}
        return Code(self.n, self.d, [w for w in self.words if w not in drop])

    def check_params(self, params: PowerParams) -> None:
        if (self.n, self.d) != (params.n, params.d):
            raise ParameterError(
                f"code over (n={self.n}, d={self.d}) does not match params (n={params.n}, d={params.d})"
            )


def _same_space(u: Word, v: Word) -> None:
    if u.n != v.n or u.d != v.d:
        raise ParameterError(f"words live in different spaces: (n={u.n}, d={u.d}) vs (n={v.n}, d={v.d})")


def tor_dist(a: int, b: int, n: int) -> int:
    """Cyclic distance between residues a and b in Z_n."""
    diff = (a - b) % n
    return min(diff, n - diff)


def word_dist(u: Word, v: Word) -> int:
    _same_space(u, v)
    return max(tor_dist(a, b, u.n) for a, b in zip(u.letters, v.letters))


def dist_matrix(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Word distances between every row of ``a`` and every row of ``b``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros((a.shape[0], b.shape[0]), dtype=np.int64)
    for c in range(a.shape[1]):
        diff = np.abs(a[:, c, None] - b[None, :, c])
        np.maximum(out, np.minimum(diff, n - diff), out=out)
    return out


def dist_to_rows(x: Sequence[int], rows: np.ndarray, n: int) -> np.ndarray:
    """Distances from a single word to each row of ``rows``."""
    diff = np.abs(np.asarray(rows, dtype=np.int64) - np.asarray(x, dtype=np.int64)[None, :])
    return np.minimum(diff, n - diff).max(axis=1)


def min_distance(code: Code):
    """Minimum pairwise word distance; ``INFINITY`` for a single word."""
    if len(code) == 0:
        raise ParameterError("minimum distance of an empty code is undefined")
    if len(code) == 1:
        return INFINITY
    arr = code.array
    best = None
    for start in range(0, len(arr) - 1, _CHUNK):
        block = arr[start:start + _CHUNK]
        dm = dist_matrix(block, arr, code.n)
        rows, cols = np.indices(dm.shape)
        # only pairs (i, j) with j > i
        dm = np.where(cols > rows + start, dm, np.iinfo(np.int64).max)
        m = int(dm.min())
        best = m if best is None else min(best, m)
    return best


def first_conflict(code: Code, k: int):
    """Return the first pair (lexicographic) of words at distance < k, or None."""
    arr = code.array
    for start in range(0, len(arr), _CHUNK):
        block = arr[start:start + _CHUNK]
        dm = dist_matrix(block, arr, code.n)
        rows, cols = np.indices(dm.shape)
        bad = (dm < k) & (cols > rows + start)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return Word(code.words[start + i], code.n), Word(code.words[j], code.n)
    return None


def are_adjacent(u: Word, v: Word, params: PowerParams) -> bool:
    _same_space(u, v)
    if (u.n, u.d) != (params.n, params.d):
        raise ParameterError("words do not match params")
    return u != v and word_dist(u, v) < params.k


def is_independent(code: Code, params: PowerParams) -> bool:
    code.check_params(params)
    if len(code) <= 1:
        return True
    return first_conflict(code, params.k) is None
