"""Bounds on independence numbers of powers of cycles and on their Shannon capacity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

import mpmath

from .errors import CirccapError, ParameterError
from .graph import DenseGraph, independence_number
from .torus import Code, PowerParams, first_conflict

# theta^d closer than this to an integer is recomputed at high precision
GUARD_BAND = 1e-6
DECIMALS = 4


class Source(str, Enum):
    SQUARE_FORMULA = "square-formula"
    HALVING = "halving"
    THETA_POWER = "theta-power"
    CODE_FILE = "code-file"
    MIS_EXACT = "mis-exact"
    PRODUCT = "product"


@dataclass(frozen=True)
class BoundRow:
    n: int
    d: int
    lower: int
    upper: int
    lower_source: Source
    upper_source: Source

    def __post_init__(self):
        if self.lower > self.upper:
            raise AssertionError(f"d={self.d}: lower bound {self.lower} exceeds upper bound {self.upper}")


def _check_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ParameterError(f"need an odd cycle length >= 3, got {n}")


def theta_cycle(n: int) -> float:
    """Lovasz theta of the odd cycle C_n."""
    _check_odd(n)
    c = math.cos(math.pi / n)
    return n * c / (1 + c)


def _theta_mp(n: int):
    c = mpmath.cos(mpmath.pi / n)
    return n * c / (1 + c)


def alpha_square(n: int) -> int:
    if n < 3:
        raise ParameterError("need n >= 3")
    return (n * n - n) // 4


def halving_upper(alpha_prev: int, n: int) -> int:
    if alpha_prev < 1:
        raise ParameterError("alpha_prev must be >= 1")
    return alpha_prev * n // 2


def theta_power_upper(n: int, d: int) -> int:
    """floor(theta(C_n)^d); values near an integer are settled at 60 digits."""
    _check_odd(n)
    if d < 1:
        raise ParameterError("d must be >= 1")
    value = theta_cycle(n) ** d
    nearest = round(value)
    if abs(value - nearest) >= GUARD_BAND:
        return math.floor(value)
    with mpmath.workdps(60):
        exact = _theta_mp(n) ** d
        if abs(exact - nearest) < mpmath.mpf(10) ** -40:
            return int(nearest)
        return int(mpmath.floor(exact))


def capacity_lower(size: int, d: int) -> float:
    if size < 1 or d < 1:
        raise ParameterError("size and d must be >= 1")
    return size ** (1.0 / d)


def _iroot(x: int, d: int) -> int:
    """Largest integer r with r**d <= x."""
    r = int(round(x ** (1.0 / d))) if x < 2**1000 else 1 << (x.bit_length() // d)
    while r**d > x:
        r -= 1
    while (r + 1) ** d <= x:
        r += 1
    return r


def capacity_lower_str(size: int, d: int, decimals: int = DECIMALS) -> str:
    """size^(1/d) truncated (never rounded up), decided in exact integer arithmetic."""
    if size < 1 or d < 1:
        raise ParameterError("size and d must be >= 1")
    scaled = _iroot(size * 10 ** (decimals * d), d)
    return _fixed(scaled, decimals)


def upper_str(value: float, decimals: int = DECIMALS) -> str:
    """Round a real upper bound up at ``decimals`` places."""
    return _fixed(math.ceil(value * 10**decimals), decimals)


def lower_str(value: float, decimals: int = DECIMALS) -> str:
    return _fixed(math.floor(value * 10**decimals), decimals)


def _fixed(scaled: int, decimals: int) -> str:
    whole, frac = divmod(scaled, 10**decimals)
    return f"{whole}.{frac:0{decimals}d}"


def ratio_transfer_check(k_src: int, n_src: int, k_dst: int, n_dst: int) -> bool:
    """True iff n_src/k_src <= n_dst/k_dst (exact), so alpha(C_{k_src,n_src}^d) <= alpha(C_{k_dst,n_dst}^d)."""
    for k, n in ((k_src, n_src), (k_dst, n_dst)):
        if k < 1 or n < 2 * k:
            raise ParameterError(f"circular graph needs 1 <= k and n >= 2k, got k={k}, n={n}")
    return n_src * k_dst <= n_dst * k_src


def _cycle_alpha(n: int) -> int:
    g = DenseGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)] if n > 2 else [])
    return independence_number(g)


class CodeVerificationError(CirccapError):
    pass


def table_for(n: int, d_max: int, codes: Mapping[int, tuple[str, Code]] | None = None) -> list[BoundRow]:
    """Lower and upper bounds on alpha(C_n^d) for d = 1..d_max.

    ``codes`` maps d to (label, code); each must be independent in C_n^d or
    CodeVerificationError names it.
    """
    if n < 3:
        raise ParameterError("need n >= 3")
    if d_max < 1:
        raise ParameterError("d_max must be >= 1")
    verified = {}
    for d, (label, code) in sorted((codes or {}).items()):
        params = PowerParams(2, n, d)
        if (code.n, code.d) != (n, d):
            raise CodeVerificationError(f"{label}: code is over (n={code.n}, d={code.d}), expected (n={n}, d={d})")
        bad = first_conflict(code, 2)
        if bad is not None:
            raise CodeVerificationError(f"{label}: words {bad[0]} and {bad[1]} are adjacent")
        if d <= d_max:
            verified[d] = len(code)

    lowers, uppers, rows = {}, {}, []
    for d in range(1, d_max + 1):
        if n % 2 == 0:
            lo, lo_src = (n // 2) ** d, (Source.MIS_EXACT if d == 1 else Source.PRODUCT)
            hi, hi_src = halving_upper(uppers.get(d - 1, 1), n), Source.HALVING
        else:
            if d == 1:
                lo, lo_src = _cycle_alpha(n), Source.MIS_EXACT
            elif d == 2:
                lo, lo_src = alpha_square(n), Source.SQUARE_FORMULA
            else:
                lo, lo_src = max((lowers[a] * lowers[d - a], Source.PRODUCT) for a in range(1, d // 2 + 1))
            if verified.get(d, 0) > lo:
                lo, lo_src = verified[d], Source.CODE_FILE
            hi, hi_src = halving_upper(uppers.get(d - 1, 1), n), Source.HALVING
            if d == 2 and alpha_square(n) < hi:
                hi, hi_src = alpha_square(n), Source.SQUARE_FORMULA
            th = theta_power_upper(n, d)
            if th < hi:
                hi, hi_src = th, Source.THETA_POWER
        lowers[d], uppers[d] = lo, hi
        rows.append(BoundRow(n, d, lo, hi, lo_src, hi_src))
    return rows


def render_table(rows: list[BoundRow], fmt: str = "text") -> str:
    header = ["d", "lower", "lower_source", "upper", "upper_source", "capacity_lb"]
    body = [
        [str(r.d), str(r.lower), r.lower_source.value, str(r.upper), r.upper_source.value,
         capacity_lower_str(r.lower, r.d)]
        for r in rows
    ]
    if fmt == "tsv":
        return "\n".join("\t".join(line) for line in [header] + body) + "\n"
    widths = [max(len(line[i]) for line in [header] + body) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in [header] + body) + "\n"
