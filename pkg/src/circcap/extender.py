"""Conflict pruning, one-shot extension and remove/add local search for codes in C_{k,n}^d."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ParameterError, PreconditionError
from .graph import DenseGraph, max_independent_set
from .torus import Code, PowerParams, dist_matrix, is_independent

log = logging.getLogger(__name__)

# Enumerating Z_n^d is only attempted up to this many words.
MAX_SPACE = 5_000_000

_CHUNK = 4096


def all_words(n: int, d: int) -> np.ndarray:
    """Every word of Z_n^d, in lexicographic order."""
    if n**d > MAX_SPACE:
        raise ParameterError(f"Z_{n}^{d} has {n**d} words, more than the limit {MAX_SPACE}")
    return np.indices((n,) * d).reshape(d, -1).T.astype(np.int64)


def prune_conflicts(code: Code, params: PowerParams) -> Code:
    """Drop every word that is adjacent to some other word of ``code``.

    Decisions are made against the original code, so both ends of every
    conflicting pair go and the result does not depend on word order.
    """
    code.check_params(params)
    if len(code) <= 1:
        return code
    close = dist_matrix(code.array, code.array, code.n) < params.k
    np.fill_diagonal(close, False)
    keep = ~close.any(axis=1)
    return Code(code.n, code.d, [w for w, ok in zip(code.words, keep) if ok])


def _require_independent(code: Code, params: PowerParams, what: str = "code"):
    code.check_params(params)
    if not is_independent(code, params):
        raise PreconditionError(f"{what} is not independent in C_{{{params.k},{params.n}}}^{params.d}")


def _free_words(m: Code, params: PowerParams) -> np.ndarray:
    """Words x outside ``m`` such that m + {x} stays independent."""
    space = all_words(params.n, params.d)
    if not len(m):
        return space
    keep = np.empty(len(space), dtype=bool)
    for start in range(0, len(space), _CHUNK):
        block = space[start:start + _CHUNK]
        keep[start:start + _CHUNK] = dist_matrix(block, m.array, params.n).min(axis=1) >= params.k
    return space[keep]


def candidate_graph(m: Code, params: PowerParams) -> DenseGraph:
    """Subgraph of C_{k,n}^d induced by the words that can join ``m`` one at a time."""
    _require_independent(m, params, "base code")
    return DenseGraph.from_words([tuple(r) for r in _free_words(m, params).tolist()], params)


@dataclass(frozen=True)
class Extension:
    code: Code
    graph: DenseGraph
    chosen: tuple[int, ...]

    @property
    def added(self) -> int:
        return len(self.chosen)


def extend_with_graph(m: Code, params: PowerParams) -> Extension:
    g = candidate_graph(m, params)
    chosen = max_independent_set(g)
    code = m.union(g.vertices[i] for i in chosen)
    return Extension(code, g, tuple(chosen))


def extend(m: Code, params: PowerParams) -> Code:
    """Add a maximum independent set of the candidate graph to ``m``."""
    return extend_with_graph(m, params).code


@dataclass(frozen=True)
class LocalSearchResult:
    t_out: int
    t_in: int
    checked: int
    improved: Code | None = None
    removed: tuple[tuple[int, ...], ...] = ()

    @property
    def found(self) -> bool:
        return self.improved is not None

    @property
    def certificate(self) -> str:
        return f"NO_IMPROVEMENT t_out={self.t_out} t_in={self.t_in} checked={self.checked}"


def _conflict_groups(r: Code, params: PowerParams, limit: int) -> dict[tuple[int, ...], list]:
    """Group the words outside ``r`` by their conflict set in ``r`` (indices into r.words).

    Only words with at most ``limit`` conflicts are kept.
    """
    space = all_words(params.n, params.d)
    groups = defaultdict(list)
    members = r._index
    for start in range(0, len(space), _CHUNK):
        block = space[start:start + _CHUNK]
        close = dist_matrix(block, r.array, params.n) < params.k
        counts = close.sum(axis=1)
        for i in np.flatnonzero(counts <= limit).tolist():
            word = tuple(block[i].tolist())
            if word in members:
                continue
            groups[tuple(np.flatnonzero(close[i]).tolist())].append(word)
    return groups


def _unions(bases: list[frozenset], limit: int) -> set[frozenset]:
    """All unions of members of ``bases`` with at most ``limit`` elements."""
    by_elem = defaultdict(list)
    for s in bases:
        for e in s:
            by_elem[e].append(s)
    small = defaultdict(list)
    for s in bases:
        small[len(s)].append(s)
    found = set(s for s in bases if len(s) <= limit)
    frontier = list(found)
    while frontier:
        nxt = []
        for u in frontier:
            partners = {s for e in u for s in by_elem[e]}
            room = limit - len(u)
            for size in range(2, room + 1):
                partners.update(small[size])
            for s in partners:
                w = u | s
                if len(w) <= limit and w not in found:
                    found.add(w)
                    nxt.append(w)
        frontier = nxt
    return found


def local_search(r: Code, params: PowerParams, t_out: int, t_in: int) -> LocalSearchResult:
    """Look for T in r with |T| <= t_out whose removal lets more than |T| words in.

    Removal sets are tried by size, then lexicographically by the indices of
    their words in r's canonical order; the first one that admits |T| + 1
    words yields the improved code. A word x outside r can join r - T iff its
    conflict set (members of r within distance < k) lies inside T, so only
    words with at most t_out conflicts are looked at. Once no single removal
    helps, every group of private conflicts holds at most one independent
    word, and a minimal improving T must be a union of conflict sets with two
    or more members; only those sets are tried beyond size 1.
    """
    if not 0 <= t_out < t_in:
        raise ParameterError(f"need 0 <= t_out < t_in, got t_out={t_out}, t_in={t_in}")
    _require_independent(r, params)
    groups = _conflict_groups(r, params, t_out)
    alpha_cache = {}

    def alpha_of(conf):
        if conf not in alpha_cache:
            g = DenseGraph.from_words(groups[conf], params)
            alpha_cache[conf] = len(max_independent_set(g))
        return alpha_cache[conf]

    checked = 0

    def admits(T: tuple[int, ...]) -> bool:
        # cheap bound first: alpha over a union is at most the sum over the parts
        parts = [S for size in range(1, len(T) + 1) for S in combinations(T, size) if S in groups]
        if not T:
            parts = [()] if () in groups else []
        if sum(alpha_of(S) for S in parts) < len(T) + 1:
            return False
        words = [w for S in parts for w in groups[S]]
        g = DenseGraph.from_words(words, params)
        return len(max_independent_set(g, target=len(T) + 1)) >= len(T) + 1

    def improve(T):
        kept = r.without(r.words[i] for i in T)
        ext = extend(kept, params)
        return LocalSearchResult(t_out, t_in, checked, ext, tuple(r.words[i] for i in T))

    checked += 1
    if admits(()):
        return improve(())
    if t_out >= 1:
        for T in sorted(S for S in groups if len(S) == 1):
            checked += 1
            if admits(T):
                return improve(T)
    if t_out >= 2:
        bases = [frozenset(S) for S in groups if len(S) >= 2]
        by_size = defaultdict(list)
        for u in _unions(bases, t_out):
            by_size[len(u)].append(tuple(sorted(u)))
        for s in range(2, t_out + 1):
            log.info("local search: %d removal sets of size %d", len(by_size[s]), s)
            for T in sorted(by_size[s]):
                checked += 1
                if admits(T):
                    return improve(T)
    return LocalSearchResult(t_out, t_in, checked)
