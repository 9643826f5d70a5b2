"""Small dense graphs with bitmask adjacency and an exact maximum independent set solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ParameterError
from .torus import PowerParams, dist_matrix


@dataclass(frozen=True, eq=False)
class DenseGraph:
    """Graph on an ordered vertex list; ``adj[i]`` has bit j set iff i ~ j."""

    vertices: tuple
    adj: tuple[int, ...]
    _edges: int = field(default=-1, repr=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        adj = tuple(int(a) for a in self.adj)
        if len(verts) != len(adj):
            raise ParameterError("one adjacency row per vertex required")
        if any(verts[i] >= verts[i + 1] for i in range(len(verts) - 1)):
            raise ParameterError("vertices must be sorted and distinct")
        for i, a in enumerate(adj):
            if a >> i & 1:
                raise ParameterError(f"self-loop at vertex {i}")
            if a >> len(adj):
                raise ParameterError(f"row {i} references a missing vertex")
            j = 0
            rest = a
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not adj[j] >> i & 1:
                    raise ParameterError(f"asymmetric edge {i}-{j}")
                rest ^= low
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_edges", sum(a.bit_count() for a in adj) // 2)

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> "DenseGraph":
        adj = [0] * num_vertices
        for u, v in edges:
            if u == v:
                raise ParameterError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(tuple(range(num_vertices)), tuple(adj))

    @classmethod
    def from_words(cls, words: Sequence[tuple[int, ...]], params: PowerParams) -> "DenseGraph":
        """Induced subgraph of C_{k,n}^d on ``words``."""
        words = sorted(set(tuple(w) for w in words))
        adj = [0] * len(words)
        if words:
            close = dist_matrix(np.array(words), np.array(words), params.n) < params.k
            np.fill_diagonal(close, False)
            for i, row in enumerate(close):
                mask = 0
                for j in np.flatnonzero(row).tolist():
                    mask |= 1 << j
                adj[i] = mask
        return cls(tuple(words), tuple(adj))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return self._edges

    def edges(self):
        for i, a in enumerate(self.adj):
            for j in _bits(a >> (i + 1) << (i + 1)):
                yield i, j

    def is_independent_set(self, indices: Iterable[int]) -> bool:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return all(not (self.adj[i] & mask) for i in _bits(mask))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _components(adj, universe: int) -> list[int]:
    comps = []
    left = universe
    while left:
        seed = left & -left
        comp = frontier = seed
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            frontier = grow & left & ~comp
            comp |= frontier
        comps.append(comp)
        left &= ~comp
    return comps


def _clique_cover_size(adj, P: int) -> int:
    # Greedy partition of P into cliques; each clique holds at most one
    # vertex of any independent set.
    commons = []
    for v in _bits(P):
        for idx, common in enumerate(commons):
            if common >> v & 1:
                commons[idx] = common & adj[v]
                break
        else:
            commons.append(adj[v] & P)
    return len(commons)


class _Stop(Exception):
    pass


class _Search:
    def __init__(self, adj, target):
        self.adj = adj
        self.target = target
        self.best_mask = 0
        self.best_size = 0

    def run(self, P: int):
        try:
            self._branch(0, 0, P)
        except _Stop:
            pass
        return self.best_mask

    def _branch(self, cur: int, size: int, P: int):
        adj = self.adj
        # vertices of degree <= 1 can always be taken
        while P:
            pick = -1
            best_v, best_deg = -1, -1
            for v in _bits(P):
                deg = (adj[v] & P).bit_count()
                if deg <= 1:
                    pick = v
                    break
                if deg > best_deg:
                    best_v, best_deg = v, deg
            if pick < 0:
                break
            cur |= 1 << pick
            size += 1
            P &= ~(adj[pick] | (1 << pick))
        if not P:
            if size > self.best_size:
                self.best_mask, self.best_size = cur, size
                if self.target is not None and size >= self.target:
                    raise _Stop
            return
        if size + _clique_cover_size(adj, P) <= self.best_size:
            return
        v = best_v
        self._branch(cur | (1 << v), size + 1, P & ~(adj[v] | (1 << v)))
        self._branch(cur, size, P & ~(1 << v))


def max_independent_set(g: DenseGraph, target: int | None = None) -> list[int]:
    """Exact maximum independent set, returned as sorted vertex indices.

    Branch and bound over bitmask candidate sets: vertices of degree <= 1 are
    taken greedily, otherwise branch on the highest-degree vertex (lowest
    index on ties), pruning with a greedy clique cover bound. Connected
    components are solved separately. With ``target`` the search stops as
    soon as an independent set of that size is known, so the result is only
    maximum when smaller than ``target``.
    """
    universe = (1 << g.num_vertices) - 1
    chosen = 0
    total = 0
    for comp in _components(g.adj, universe):
        need = None if target is None else target - total
        found = _Search(g.adj, need).run(comp)
        chosen |= found
        total += found.bit_count()
        if target is not None and total >= target:
            break
    return list(_bits(chosen))


def independence_number(g: DenseGraph) -> int:
    return len(max_independent_set(g))
