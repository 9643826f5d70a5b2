"""Reading and writing code files.

Format::

    # optional comments
    n=7 d=5
    0,2,0,2,0
    ...

For n <= 10 a word may also be written as d contiguous digits, several per
line separated by commas or whitespace (``02020, 02112, ...``).
"""

from __future__ import annotations

import io
import re
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

from .errors import CodeFormatError, ParameterError
from .torus import Code, _check_nd

_HEADER = re.compile(r"^n\s*=\s*(\d+)\s+d\s*=\s*(\d+)$")
_SPLIT = re.compile(r"[,\s]+")

APPENDIX_RESOURCE = "appendix_367.txt"


def parse_code(text: str) -> Code:
    n = d = None
    words = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise CodeFormatError(f"expected header 'n=<n> d=<d>', got {line!r}", lineno)
            n, d = int(m.group(1)), int(m.group(2))
            try:
                _check_nd(n, d)
            except ParameterError as exc:
                raise CodeFormatError(str(exc), lineno) from None
            continue
        tokens = [t for t in _SPLIT.split(line) if t]
        for letters in _words_on_line(tokens, n, d, lineno):
            if letters in seen:
                raise CodeFormatError(
                    f"duplicate word {','.join(map(str, letters))} (first on line {seen[letters]})",
                    lineno,
                )
            seen[letters] = lineno
            words.append(letters)
    if n is None:
        raise CodeFormatError("missing header 'n=<n> d=<d>'")
    return Code(n, d, words)


def _words_on_line(tokens, n, d, lineno):
    if not all(t.isdigit() for t in tokens):
        raise CodeFormatError(f"non-numeric token in {' '.join(tokens)!r}", lineno)
    if d == 1:
        groups = [(int(t),) for t in tokens]
    elif n <= 10 and all(len(t) == d for t in tokens):
        groups = [tuple(int(ch) for ch in t) for t in tokens]
    elif len(tokens) == d:
        groups = [tuple(int(t) for t in tokens)]
    else:
        raise CodeFormatError(f"expected {d} letters, got {len(tokens)}", lineno)
    for g in groups:
        for x in g:
            if x >= n:
                raise CodeFormatError(f"letter {x} outside [0, {n - 1}]", lineno)
    return groups


def read_code(path) -> Code:
    return parse_code(Path(path).read_text())


def format_code(code: Code, compact: bool = False, comments: Iterable[str] = ()) -> str:
    if compact and code.n > 10:
        raise ParameterError("compact digit format needs n <= 10")
    out = io.StringIO()
    for c in comments:
        out.write(f"# {c}\n")
    out.write(f"n={code.n} d={code.d}\n")
    for w in code.words:
        out.write(("".join(map(str, w)) if compact else ",".join(map(str, w))) + "\n")
    return out.getvalue()


def write_code(code: Code, dest, compact: bool = False, comments: Iterable[str] = ()) -> None:
    """Write ``code`` to a path or an open text stream."""
    text = format_code(code, compact=compact, comments=comments)
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    else:
        dest.write(text)


def appendix_text() -> str:
    return resources.files("circcap.data").joinpath(APPENDIX_RESOURCE).read_text()


def appendix_code() -> Code:
    """The 367-word independent set in C_7^5 shipped with the package."""
    return parse_code(appendix_text())
