"""Geometric cyclic codes {t * (1, q, ..., q^(d-1)) : t in Z_n} and their distances."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import ParameterError
from .torus import Code, Word, _check_nd

# Above this modulus t * q^i can overflow int64 before reduction.
_NUMPY_MAX_N = 2**31


@dataclass(frozen=True)
class CyclicCodeSpec:
    n: int
    d: int
    q: int

    def __post_init__(self):
        _check_nd(self.n, self.d)
        if not 1 <= self.q <= self.n - 1:
            raise ParameterError(f"q must lie in [1, n-1] = [1, {self.n - 1}], got {self.q}")

    @property
    def generator(self) -> Word:
        return Word(tuple(pow(self.q, i, self.n) for i in range(self.d)), self.n)


def cyclic_code(spec: CyclicCodeSpec) -> Code:
    g = spec.generator.letters
    n = spec.n
    return Code(n, spec.d, [tuple(t * x % n for x in g) for t in range(n)])


def _orbit_distances(n: int, g: Sequence[int], ts) -> np.ndarray:
    """Distance from zero of t*g for each t in ``ts``."""
    if n < _NUMPY_MAX_N:
        t = np.asarray(ts, dtype=np.int64)[:, None]
        r = (t * np.asarray(g, dtype=np.int64)[None, :]) % n
        return np.minimum(r, n - r).max(axis=1)
    return np.array([max(min(t * x % n, n - t * x % n) for x in g) for t in ts], dtype=object)


def k_of(spec: CyclicCodeSpec, full: bool = False) -> int:
    """Minimum distance of the cyclic code of ``spec``.

    The code is a subgroup of Z_n^d, so its minimum distance is the smallest
    distance of a nonzero member from zero. t*g and (n-t)*g are negatives of
    each other and equally far from zero, so only t <= n/2 is scanned unless
    ``full`` is set.
    """
    n = spec.n
    top = n - 1 if full else n // 2
    return int(_orbit_distances(n, spec.generator.letters, range(1, top + 1)).min())


@dataclass(frozen=True, order=True)
class SweepRecord:
    ratio: Fraction
    n: int
    q: int
    k: int

    def within(self, target: Fraction) -> bool:
        # exact rational comparison
        return self.ratio <= target

    def tsv(self) -> str:
        return f"{self.n}\t{self.q}\t{self.k}\t{self.ratio.numerator}/{self.ratio.denominator}"


def _sweep_chunk(args):
    d, ns, qs = args
    out = []
    for n in ns:
        for q in qs:
            if q >= n:
                continue
            k = k_of(CyclicCodeSpec(n, d, q))
            out.append(SweepRecord(Fraction(n, k), n, q, k))
    return out


def sweep(
    d: int,
    n_range: Iterable[int],
    q_range: Iterable[int],
    target_ratio: Fraction | None = None,
    only_within: bool = False,
    workers: int = 1,
) -> list[SweepRecord]:
    """Evaluate k(n, d, q) over a grid, sorted by n/k, then n, then q.

    Pairs with q >= n are skipped. With ``only_within`` the result keeps
    records with n/k <= ``target_ratio``.
    """
    ns = sorted(set(int(n) for n in n_range))
    qs = sorted(set(int(q) for q in q_range))
    if not ns or not qs:
        raise ParameterError("sweep needs nonempty n and q ranges")
    if qs[0] < 1:
        raise ParameterError("q must be >= 1")
    if ns[0] < 2:
        raise ParameterError("n must be >= 2")
    if only_within and target_ratio is None:
        raise ParameterError("filtering needs a target ratio")
    chunks = [(d, ns[i::workers], qs) for i in range(workers)] if workers > 1 else [(d, ns, qs)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_chunk, chunks))
    else:
        parts = [_sweep_chunk(chunks[0])]
    records = sorted(r for part in parts for r in part)
    if only_within:
        target = Fraction(target_ratio)
        records = [r for r in records if r.within(target)]
    return records


def product_combine(a: Code, b: Code) -> Code:
    """All concatenations of a word of ``a`` with a word of ``b``."""
    if a.n != b.n:
        raise ParameterError(f"modulus mismatch: {a.n} vs {b.n}")
    _check_nd(a.n, a.d + b.d)
    return Code(a.n, a.d + b.d, [u + v for u, v in product(a.words, b.words)])
