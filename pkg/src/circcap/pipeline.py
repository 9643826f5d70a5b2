"""End-to-end construction: cyclic code -> shift -> floor scaling -> pruning -> extension."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Iterable

from .bounds import capacity_lower_str
from .constructor import CyclicCodeSpec, cyclic_code, k_of
from .errors import CirccapError, ParameterError
from .extender import LocalSearchResult, extend_with_graph, local_search, prune_conflicts
from .torus import Code, PowerParams, Word, is_independent
from .transform import RationalDivisor, scale_floor, translate

log = logging.getLogger(__name__)

PAPER_SHIFT = (40, 123, 40, 123, 40)


class StageError(CirccapError):
    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage {stage!r} failed: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass(frozen=True)
class PipelineConfig:
    n: int = 382
    d: int = 5
    q: int = 7
    shift: tuple[int, ...] = PAPER_SHIFT
    divisor: RationalDivisor = field(default_factory=lambda: RationalDivisor(109, 2))
    m: int = 7
    k: int = 2
    do_extend: bool = True
    t_out: int | None = None
    t_in: int | None = None

    def __post_init__(self):
        if len(self.shift) != self.d:
            raise ParameterError(f"shift has {len(self.shift)} letters, expected d={self.d}")
        top = self.divisor.apply(self.n - 1)
        if top > self.m - 1:
            raise ParameterError(f"letter {self.n - 1} maps to {top}, outside Z_{self.m}")
        if (self.t_out is None) != (self.t_in is None):
            raise ParameterError("give both t_out and t_in, or neither")

    @property
    def target(self) -> PowerParams:
        return PowerParams(self.k, self.m, self.d)


@dataclass
class PipelineReport:
    config: PipelineConfig
    source_k: int
    size_s: int
    size_s_prime: int
    merged: int
    size_m: int
    graph_vertices: int | None = None
    graph_edges: int | None = None
    alpha_g: int | None = None
    code: Code | None = None
    independent: bool = False
    local: LocalSearchResult | None = None

    @property
    def size_r(self) -> int:
        return len(self.code)

    def lines(self) -> list[str]:
        c = self.config
        out = [
            f"params n={c.n} d={c.d} q={c.q} shift={','.join(map(str, c.shift))} divisor={c.divisor} m={c.m} k={c.k}",
            f"S size={self.size_s} min_distance={self.source_k}",
            f"S' size={self.size_s_prime} merged={self.merged}",
            f"M size={self.size_m}",
        ]
        if self.graph_vertices is not None:
            out.append(f"G vertices={self.graph_vertices} edges={self.graph_edges} alpha={self.alpha_g}")
        out.append(f"R size={self.size_r} independent={'yes' if self.independent else 'no'} "
                   f"capacity_lb={capacity_lower_str(self.size_r, c.d)}")
        if self.local is not None:
            if self.local.found:
                out.append(f"IMPROVED size={len(self.local.improved)} removed={len(self.local.removed)} "
                           f"checked={self.local.checked}")
            else:
                out.append(self.local.certificate)
        return out


def _stage(name, fn, *args):
    log.info("stage %s", name)
    try:
        return fn(*args)
    except CirccapError as exc:
        raise StageError(name, exc) from exc
    except ValueError as exc:
        raise StageError(name, exc) from exc


def run_pipeline(config: PipelineConfig) -> PipelineReport:
    spec = _stage("cyclic", CyclicCodeSpec, config.n, config.d, config.q)
    s = _stage("cyclic", cyclic_code, spec)
    source_k = _stage("cyclic", k_of, spec)
    shifted = _stage("translate", translate, s, Word.reduce(config.shift, config.n))
    s_prime = _stage("scale", scale_floor, shifted, config.divisor, config.m)
    params = _stage("prune", lambda: config.target)
    m = _stage("prune", prune_conflicts, s_prime, params)
    report = PipelineReport(config, source_k, len(s), len(s_prime), len(s) - len(s_prime), len(m))
    if config.do_extend:
        ext = _stage("extend", extend_with_graph, m, params)
        report.graph_vertices = ext.graph.num_vertices
        report.graph_edges = ext.graph.num_edges
        report.alpha_g = ext.added
        report.code = ext.code
    else:
        report.code = m
    report.independent = is_independent(report.code, params)
    if config.t_out is not None:
        report.local = _stage("localsearch", local_search, report.code, params, config.t_out, config.t_in)
    return report


@dataclass(frozen=True)
class GridEntry:
    shift: tuple[int, ...]
    divisor: RationalDivisor
    size: int | None
    error: str | None = None


def grid_search(base: PipelineConfig, shifts: Iterable[tuple[int, ...]],
                divisors: Iterable[RationalDivisor]) -> tuple[list[GridEntry], PipelineReport | None]:
    """Run the pipeline over every (shift, divisor) pair.

    The winner is the largest |R|; ties go to the lexicographically smallest
    (shift, divisor) key. Pairs whose divisor does not fit Z_m are recorded
    with their error and skipped.
    """
    entries, best, best_key = [], None, None
    for shift in shifts:
        for div in divisors:
            try:
                cfg = replace(base, shift=tuple(shift), divisor=div, t_out=None, t_in=None)
                rep = run_pipeline(cfg)
            except (ParameterError, StageError) as exc:
                entries.append(GridEntry(tuple(shift), div, None, str(exc)))
                continue
            entries.append(GridEntry(tuple(shift), div, rep.size_r))
            key = (-rep.size_r, tuple(shift), (div.a, div.b))
            if best_key is None or key < best_key:
                best, best_key = rep, key
    if best is not None and base.t_out is not None:
        cfg = replace(best.config, t_out=base.t_out, t_in=base.t_in)
        best.config = cfg
        best.local = _stage("localsearch", local_search, best.code, cfg.target, cfg.t_out, cfg.t_in)
    return entries, best
