"""Command-line interface.

Exit codes: 0 success, 1 verification failed (or no improvement when one was
demanded), 2 usage or file format error. Results go to stdout, progress to
stderr.
"""

from __future__ import annotations

import functools
import logging
import sys
from fractions import Fraction

import click

from . import bounds as bnd
from .codeio import appendix_code, read_code, write_code
from .constructor import CyclicCodeSpec, cyclic_code, sweep as run_sweep
from .errors import CirccapError, CodeFormatError, ParameterError, PreconditionError
from .extender import extend_with_graph, local_search
from .pipeline import PAPER_SHIFT, PipelineConfig, StageError, grid_search, run_pipeline
from .torus import PowerParams, first_conflict, min_distance, word_dist
from .transform import RationalDivisor

log = logging.getLogger("circcap")


def _fail(msg: str, code: int):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except CodeFormatError as exc:
            _fail(str(exc), 2)
        except StageError as exc:
            _fail(str(exc), 2 if isinstance(exc.cause, ParameterError) else 1)
        except PreconditionError as exc:
            _fail(str(exc), 1)
        except (ParameterError, OSError) as exc:
            _fail(str(exc), 2)
    return wrapper


def _parse_word(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated residues, got {text!r}") from None


def _parse_divisor(text: str) -> RationalDivisor:
    try:
        return RationalDivisor.parse(text)
    except ParameterError as exc:
        raise click.BadParameter(str(exc)) from None


def _parse_range(text: str) -> list[int]:
    """``a:b`` (inclusive), ``a,b,c`` or a single integer."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":"))
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"bad range {text!r}") from None


def _load(path, appendix):
    if appendix:
        if path:
            raise click.UsageError("give a file or --appendix, not both")
        return appendix_code()
    if not path:
        raise click.UsageError("a code file (or --appendix) is required")
    return read_code(path)


def _emit(code, out, compact, comments=()):
    if out:
        write_code(code, out, compact=compact, comments=comments)
        click.echo(f"wrote {len(code)} words to {out}", err=True)
    else:
        write_code(code, sys.stdout, compact=compact, comments=comments)


code_source = [
    click.argument("path", required=False, type=click.Path(dir_okay=False)),
    click.option("--appendix", is_flag=True, help="Use the bundled 367-word set in C_7^5."),
]


def with_code_source(fn):
    for deco in reversed(code_source):
        fn = deco(fn)
    return fn


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Progress messages on stderr.")
def main(verbose):
    """Independent sets in strong powers of circular graphs C_{k,n}."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")


@main.command()
@with_code_source
@click.option("--k", type=int, default=2, show_default=True, help="Distance threshold.")
@click.option("--n", "expected_n", type=int, help="Fail unless the file is over Z_n.")
@_guard
def verify(path, appendix, k, expected_n):
    """Check that a code is independent in C_{k,n}^d."""
    code = _load(path, appendix)
    if expected_n is not None and code.n != expected_n:
        _fail(f"file is over Z_{code.n}, expected Z_{expected_n}", 1)
    PowerParams(k, code.n, code.d)
    bad = first_conflict(code, k)
    if bad is not None:
        u, v = bad
        click.echo(f"CONFLICT {u} {v} distance={word_dist(u, v)} k={k}")
        sys.exit(1)
    click.echo(f"INDEPENDENT size={len(code)} n={code.n} d={code.d} k={k} "
               f"capacity_lb={bnd.capacity_lower_str(len(code), code.d)}")


@main.command()
@click.option("--file", "path", type=click.Path(dir_okay=False), help="Code file.")
@click.option("--appendix", is_flag=True, help="Use the bundled 367-word set in C_7^5.")
@_guard
def mindist(path, appendix):
    """Print the minimum distance of a code."""
    code = _load(path, appendix)
    value = min_distance(code)
    click.echo("inf" if value == float("inf") else str(value))


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--d", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--compact", is_flag=True, help="Digit-string words (n <= 10).")
@_guard
def cyclic(n, d, q, out, compact):
    """Write the cyclic code {t*(1,q,...,q^(d-1)) : t in Z_n}."""
    spec = CyclicCodeSpec(n, d, q)
    _emit(cyclic_code(spec), out, compact, [f"cyclic code n={n} d={d} q={q}"])


@main.command()
@click.option("--d", type=int, required=True)
@click.option("--n", "n_range", required=True, help="n values: a:b, a,b,c or a single value.")
@click.option("--q", "q_range", required=True, help="q values, same syntax.")
@click.option("--target", help="Target ratio n/k, e.g. 7/2.")
@click.option("--only-within", is_flag=True, help="Keep records with n/k <= target.")
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--threads", type=int, default=1, show_default=True, help="Worker processes.")
@_guard
def sweep(d, n_range, q_range, target, only_within, out, threads):
    """Tabulate k(n,d,q) and n/k over a grid, sorted by n/k."""
    ratio = None
    if target is not None:
        try:
            ratio = Fraction(target)
        except (ValueError, ZeroDivisionError):
            raise click.BadParameter(f"bad ratio {target!r}") from None
    records = run_sweep(d, _parse_range(n_range), _parse_range(q_range), ratio, only_within,
                        workers=max(1, threads))
    text = "n\tq\tk\tratio\n" + "".join(r.tsv() + "\n" for r in records)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--n", type=int, default=382, show_default=True)
@click.option("--d", type=int, default=5, show_default=True)
@click.option("--q", type=int, default=7, show_default=True)
@click.option("--shift", "shifts", multiple=True,
              help="Constant word added to every word; repeat for a grid.  [default: 40,123,40,123,40]")
@click.option("--divisor", "divisors", multiple=True,
              help="Floor-scaling divisor a/b or decimal; repeat for a grid.  [default: 109/2]")
@click.option("--m", type=int, default=7, show_default=True, help="Target modulus.")
@click.option("--k", type=int, default=2, show_default=True, help="Target distance threshold.")
@click.option("--no-extend", is_flag=True, help="Stop after pruning.")
@click.option("--t-out", type=int, help="Run local search with this removal radius.")
@click.option("--t-in", type=int, help="Local search addition radius (default t-out + 1).")
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--compact", is_flag=True)
@_guard
def pipeline(n, d, q, shifts, divisors, m, k, no_extend, t_out, t_in, out, compact):
    """Cyclic code -> shift -> floor scale -> prune -> extend (-> local search)."""
    shift_words = [_parse_word(s) for s in shifts] or [PAPER_SHIFT if d == 5 else (0,) * d]
    divs = [_parse_divisor(x) for x in divisors] or [RationalDivisor(109, 2)]
    if t_out is not None and t_in is None:
        t_in = t_out + 1
    base = PipelineConfig(n=n, d=d, q=q, shift=shift_words[0], divisor=divs[0], m=m, k=k,
                          do_extend=not no_extend, t_out=t_out, t_in=t_in)
    if len(shift_words) == 1 and len(divs) == 1:
        report = run_pipeline(base)
    else:
        entries, report = grid_search(base, shift_words, divs)
        for e in entries:
            size = e.size if e.size is not None else f"skipped ({e.error})"
            click.echo(f"grid shift={','.join(map(str, e.shift))} divisor={e.divisor} size={size}", err=True)
        if report is None:
            _fail("no grid point produced a code", 2)
    for line in report.lines():
        click.echo(line)
    if out:
        write_code(report.code, out, compact=compact, comments=report.lines())
    if not report.independent:
        sys.exit(1)


@main.command()
@with_code_source
@click.option("--k", type=int, default=2, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--compact", is_flag=True)
@_guard
def extend(path, appendix, k, out, compact):
    """Add a maximum set of compatible words to an independent code."""
    code = _load(path, appendix)
    params = PowerParams(k, code.n, code.d)
    ext = extend_with_graph(code, params)
    click.echo(f"G vertices={ext.graph.num_vertices} edges={ext.graph.num_edges} alpha={ext.added}", err=True)
    click.echo(f"size {len(code)} -> {len(ext.code)}", err=True)
    _emit(ext.code, out, compact)


@main.command()
@with_code_source
@click.option("--k", type=int, default=2, show_default=True)
@click.option("--t-out", type=int, default=1, show_default=True, help="Max words removed.")
@click.option("--t-in", type=int, help="Words to add (default t-out + 1).")
@click.option("--out", type=click.Path(dir_okay=False), help="Where to write an improved code.")
@click.option("--compact", is_flag=True)
@click.option("--require-improvement", is_flag=True, help="Exit 1 if nothing better is found.")
@_guard
def localsearch(path, appendix, k, t_out, t_in, out, compact, require_improvement):
    """Try removing up to t-out words so that more words fit in."""
    code = _load(path, appendix)
    params = PowerParams(k, code.n, code.d)
    res = local_search(code, params, t_out, t_out + 1 if t_in is None else t_in)
    if not res.found:
        click.echo(res.certificate)
        if require_improvement:
            sys.exit(1)
        return
    click.echo(f"IMPROVED size={len(res.improved)} removed={len(res.removed)} checked={res.checked}")
    if out:
        write_code(res.improved, out, compact=compact)


def _parse_code_flag(text: str):
    head, sep, path = text.partition(":")
    if not sep or not head.startswith("d=") or not head[2:].isdigit():
        raise click.BadParameter(f"expected d=<d>:<path>, got {text!r}")
    return int(head[2:]), path


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--d-max", type=int, default=5, show_default=True)
@click.option("--code", "code_flags", multiple=True, help="Verified lower bound: d=<d>:<path>.")
@click.option("--format", "fmt", type=click.Choice(["text", "tsv"]), default="text", show_default=True)
@_guard
def bounds(n, d_max, code_flags, fmt):
    """Table of lower/upper bounds on alpha(C_n^d)."""
    codes = {}
    for flag in code_flags:
        d, path = _parse_code_flag(flag)
        codes[d] = (path, read_code(path))
    try:
        rows = bnd.table_for(n, d_max, codes)
    except bnd.CodeVerificationError as exc:
        _fail(str(exc), 1)
    click.echo(bnd.render_table(rows, fmt), nl=False)


@main.command()
@click.option("--n", type=int, required=True, help="Odd cycle length, or even for the trivial value n/2.")
@_guard
def theta(n):
    """Lovasz theta of C_n, with a safe 4-decimal upper bound."""
    if n >= 2 and n % 2 == 0:
        click.echo(f"theta n={n} value={n // 2} upper={n // 2}.0000 (even cycle: capacity n/2)")
        return
    value = bnd.theta_cycle(n)
    click.echo(f"theta n={n} value={value:.10f} upper={bnd.upper_str(value)}")


if __name__ == "__main__":
    main()
