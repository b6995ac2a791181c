"""Command-line front end.

Subcommands::

    entropy   one (p, q, k) query, JSON (default) or CSV
    sweep     entropy along a level-k or separation-x grid, CSV (default) or JSON
    figure1   E(x) for the level-1 CP^1 pair p = x, q = -x, closed form vs pipeline
    verify    oracle cross-checks; exit status 0 iff every check passes

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 computation
error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, List, Optional, Sequence

from . import __version__
from .backends import Backend, BackendConfig, Point
from .entropy import cp1_example_entropy, entropy_deficit, report
from .errors import CoherentEntropyError
from .overlap import EntropyReport

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_COMPUTE, EXIT_IO = 0, 1, 2, 3, 4

REPORT_KEYS = (
    "backend", "n", "k", "p", "q", "c_re", "c_im", "abs_c", "lambda1", "lambda2",
    "entropy", "bound_general", "bound_thm2", "dist", "decomposable",
)
SWEEP_HEADER = (
    "k", "x", "abs_c", "lambda1", "lambda2", "entropy", "bound_general", "bound_thm2",
    "dist", "deficit",
)
FIGURE_HEADER = ("x", "entropy_closed_form", "entropy_pipeline")
POINT_FLAGS = ("--p", "--q")


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    """CSV cell: shortest round-trip float repr, empty for missing values."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write_csv(header: Sequence[str], rows: Iterable[Sequence], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])


def _write_json(obj, out) -> None:
    json.dump(obj, out, allow_nan=False)
    out.write("\n")


def _point(text: str) -> Point:
    try:
        return Point.parse(text)
    except (ValueError, CoherentEntropyError) as exc:
        raise argparse.ArgumentTypeError(f"invalid point {text!r}: {exc}") from None


def _config(args, k: Optional[int] = None) -> BackendConfig:
    try:
        kind = Backend(args.backend)
        n = 1 if kind is Backend.PROJECTIVE_LINE else args.n
        return BackendConfig(kind, args.k if k is None else k, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def report_record(p: Point, q: Point, cfg: BackendConfig, rep: EntropyReport) -> dict:
    c = rep.overlap.c
    return {
        "backend": cfg.kind.value,
        "n": cfg.n,
        "k": cfg.k,
        "p": p.format(),
        "q": q.format(),
        "c_re": c.real,
        "c_im": c.imag,
        "abs_c": abs(c),
        "lambda1": rep.schmidt.lambda1,
        "lambda2": rep.schmidt.lambda2,
        "entropy": rep.entropy,
        "bound_general": rep.bound_general,
        "bound_thm2": rep.bound_thm2,
        "dist": rep.dist,
        "decomposable": rep.decomposable_flag,
    }


def _sweep_row(k: int, x: Optional[float], rep: EntropyReport) -> tuple:
    return (
        k, x, rep.overlap.abs_c, rep.schmidt.lambda1, rep.schmidt.lambda2, rep.entropy,
        rep.bound_general, rep.bound_thm2, rep.dist, entropy_deficit(rep.schmidt),
    )


# -- subcommands ---------------------------------------------------------------

def cmd_entropy(args, out) -> int:
    cfg = _config(args)
    rep = report(args.p, args.q, cfg)
    record = report_record(args.p, args.q, cfg, rep)
    if args.format == "csv":
        _write_csv(REPORT_KEYS, [[record[key] for key in REPORT_KEYS]], out)
    else:
        _write_json(record, out)
    return EXIT_OK


def _level_grid(lo: float, hi: float, steps: Optional[int]) -> List[int]:
    if lo != int(lo) or hi != int(hi):
        raise UsageError("level sweeps need integer --min and --max")
    lo, hi = int(lo), int(hi)
    if lo < 1 or not lo < hi:
        raise UsageError("level sweep needs 1 <= --min < --max")
    if steps is None:
        return list(range(lo, hi + 1))
    if steps < 2:
        raise UsageError("--steps must be at least 2")
    grid = sorted({round(lo + (hi - lo) * i / (steps - 1)) for i in range(steps)})
    return grid


def _linear_grid(lo: float, hi: float, steps: int, include_min: bool = True) -> List[float]:
    if not lo < hi:
        raise UsageError("--min must be smaller than --max")
    if steps < 2:
        raise UsageError("--steps must be at least 2")
    if include_min:
        return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]
    return [lo + (hi - lo) * i / steps for i in range(1, steps + 1)]


def _sweep_records(args) -> List[tuple]:
    rows = []
    if args.variable == "k":
        lo = 1.0 if args.min is None else args.min
        hi = 50.0 if args.max is None else args.max
        base = _config(args, k=1)
        for k in _level_grid(lo, hi, args.steps):
            cfg = BackendConfig(base.kind, k, base.n)
            rows.append(_sweep_row(k, None, report(args.p, args.q, cfg)))
    else:
        lo = 0.0 if args.min is None else args.min
        hi = 5.0 if args.max is None else args.max
        cfg = _config(args)
        pad = (0j,) * (cfg.n - 1)
        for x in _linear_grid(lo, hi, args.steps or 100, include_min=lo > 0):
            p, q = Point((complex(x),) + pad), Point((complex(-x),) + pad)
            rows.append(_sweep_row(cfg.k, x, report(p, q, cfg)))
    return rows


def cmd_sweep(args, out) -> int:
    rows = _sweep_records(args)
    if args.format == "json":
        _write_json([dict(zip(SWEEP_HEADER, row)) for row in rows], out)
    else:
        _write_csv(SWEEP_HEADER, rows, out)
    return EXIT_OK


def figure1_rows(lo: float = 0.0, hi: float = 5.0, steps: int = 500) -> List[tuple]:
    """Grid ``x_i = lo + (hi - lo) i / steps``, i = 1..steps (``lo`` itself excluded)."""
    if lo < 0:
        raise UsageError("figure1 needs x >= 0")
    cfg = BackendConfig(Backend.PROJECTIVE_LINE, 1)
    rows = []
    for x in _linear_grid(lo, hi, steps, include_min=False):
        pipeline = report(Point.of(x), Point.of(-x), cfg).entropy
        rows.append((x, cp1_example_entropy(x), pipeline))
    return rows


def cmd_figure1(args, out) -> int:
    rows = figure1_rows(
        0.0 if args.min is None else args.min,
        5.0 if args.max is None else args.max,
        args.steps or 500,
    )
    if args.svg:
        from .svg import polyline_svg

        doc = polyline_svg(
            [r[0] for r in rows], [r[1] for r in rows],
            title="Entanglement entropy E(x), p = x, q = -x on CP^1",
            xlabel="x", ylabel="E(x) [nats]",
        )
        try:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(doc)
        except OSError as exc:
            print(f"figure1: cannot write {args.svg}: {exc}", file=sys.stderr)
            return EXIT_IO
    if args.format == "json":
        _write_json([dict(zip(FIGURE_HEADER, row)) for row in rows], out)
    else:
        _write_csv(FIGURE_HEADER, rows, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .verification import coherent_pair_checks, quadrature_checks, random_pair_checks

    if args.cases < 0:
        raise UsageError("--cases must be nonnegative")
    results = (
        random_pair_checks(args.cases, args.seed)
        + coherent_pair_checks(200, args.seed)
        + quadrature_checks()
    )
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"FAIL [{r.suite}] {json.dumps(r.params)}: {r.detail}", file=sys.stderr)
    suites = {}
    for r in results:
        passed, total = suites.get(r.suite, (0, 0))
        suites[r.suite] = (passed + r.passed, total + 1)
    parts = ", ".join(f"{name} {p}/{t}" for name, (p, t) in suites.items())
    print(f"verify: {len(results) - len(failed)} passed, {len(failed)} failed ({parts})", file=out)
    return EXIT_VERIFY if failed else EXIT_OK


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coherent-entropy",
        description="Entanglement entropy of Bell-type coherent-state pairs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def backend_flags(sp, need_points=True):
        sp.add_argument("--backend", choices=[b.value for b in Backend], default="sb")
        sp.add_argument("--n", type=int, default=1, help="dimension of C^n (sb only)")
        sp.add_argument("--k", type=int, default=1, help="quantum level")
        if need_points:
            sp.add_argument("--p", type=_point, default=Point.parse("0,0"),
                            help="point as 're,im;re,im;...'")
            sp.add_argument("--q", type=_point, default=Point.parse("1,0"))

    sp = sub.add_parser("entropy", help="single-query report")
    backend_flags(sp)
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_entropy)

    sp = sub.add_parser("sweep", help="level or separation sweep (CSV)")
    backend_flags(sp)
    sp.add_argument("--variable", choices=["k", "x"], default="k",
                    help="k: level sweep at fixed p, q; x: p = x, q = -x at fixed k")
    sp.add_argument("--min", type=float)
    sp.add_argument("--max", type=float)
    sp.add_argument("--steps", type=int)
    sp.add_argument("--format", choices=["json", "csv"], default="csv")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("figure1", help="E(x) for p = x, q = -x on CP^1 at level 1")
    sp.add_argument("--min", type=float, help="grid start (excluded), default 0")
    sp.add_argument("--max", type=float, help="grid end (included), default 5")
    sp.add_argument("--steps", type=int, help="number of grid points, default 500")
    sp.add_argument("--svg", metavar="PATH", help="also write an SVG plot to PATH")
    sp.add_argument("--format", choices=["json", "csv"], default="csv")
    sp.set_defaults(func=cmd_figure1)

    sp = sub.add_parser("verify", help="run oracle cross-checks")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--cases", type=int, default=1000, help="random vector pairs")
    sp.set_defaults(func=cmd_verify)
    return parser


def _attach_point_values(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--p VALUE`` as ``--p=VALUE`` so values like ``-1,0`` parse."""
    argv = list(argv)
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in POINT_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_attach_point_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    # buffer so a failing command never leaves partial output
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except UsageError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CoherentEntropyError, ValueError, ArithmeticError) as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
