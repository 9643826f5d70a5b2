"""Letterwise code transformations: translation, floor scaling, cycle rounding."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import LetterRangeError, ParameterError, PreconditionError
from .torus import Code, PowerParams, Word, is_independent

_DECIMAL = re.compile(r"^\d+(\.\d+)?$")


@dataclass(frozen=True)
class RationalDivisor:
    """Divisor a/b; letter i maps to floor(i * b / a)."""

    a: int
    b: int = 1

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ParameterError(f"divisor must be positive, got {self.a}/{self.b}")
        g = gcd(self.a, self.b)
        object.__setattr__(self, "a", self.a // g)
        object.__setattr__(self, "b", self.b // g)

    @classmethod
    def parse(cls, text: str) -> "RationalDivisor":
        """Parse ``a/b`` or a plain decimal like ``54.5`` (read exactly, never via float)."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            if not (num.strip().isdigit() and den.strip().isdigit()):
                raise ParameterError(f"bad divisor {text!r}")
            return cls(int(num), int(den))
        if not _DECIMAL.match(text):
            raise ParameterError(f"bad divisor {text!r}; use a/b or a plain decimal")
        f = Fraction(text)
        return cls(f.numerator, f.denominator)

    def apply(self, i):
        return i * self.b // self.a

    def __str__(self):
        return f"{self.a}/{self.b}"


def translate(code: Code, c: Word) -> Code:
    if (c.n, c.d) != (code.n, code.d):
        raise ParameterError("shift word does not match the code's (n, d)")
    if not len(code):
        return code
    arr = (code.array + np.asarray(c.letters, dtype=np.int64)[None, :]) % code.n
    return Code.from_array(code.n, arr)


def scale_floor(code: Code, divisor: RationalDivisor, target_modulus: int) -> Code:
    """Map every letter i to floor(i / divisor) and read the result over Z_m.

    The output is a set, so words that collide are merged.
    """
    m = target_modulus
    if m < 2:
        raise ParameterError("target modulus must be >= 2")
    if not len(code):
        return Code(m, code.d)
    arr = code.array * divisor.b // divisor.a
    if arr.max() >= m:
        r, c = np.unravel_index(np.argmax(arr), arr.shape)
        raise LetterRangeError(int(code.array[r, c]), int(arr[r, c]), m)
    return Code.from_array(m, arr)


def cycle_modulus(n: int, k: int) -> int:
    return -(-2 * n // k)


def round_to_cycle(code: Code, params: PowerParams) -> Code:
    """Send an independent set of C_{k,n}^d to one of C_{ceil(2n/k)}^d via i -> floor(2i/k)."""
    code.check_params(params)
    if not is_independent(code, params):
        raise PreconditionError(f"code is not independent in C_{{{params.k},{params.n}}}^{params.d}")
    m = cycle_modulus(params.n, params.k)
    if not len(code):
        return Code(m, code.d)
    return Code.from_array(m, code.array * 2 // params.k)
