"""Command-line interface: ``convex-crossings <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or precondition error.
Large integers are written as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import __version__
from .bounds import total_lower_bound
from .construct import certify
from .drawing import ConvexDrawing
from .errors import PreconditionError
from .formulas import (
    FormulaInput,
    closed_form_value,
    nu1_balanced,
    nu1_bipartite,
    nu1_special,
    nu1_theorem1,
    nu1_theorem2,
)
from .multipartite import PartitionSpec
from .search import MAX_EXACT_VERTICES, exact_min, heuristic_min, resolve_workers
from .svg import render_svg

Instance = Tuple[int, int, int]


class UsageError(Exception):
    pass


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _fail(message: str, **extra) -> int:
    sys.stderr.write(json.dumps({"error": message, **extra}) + "\n")
    return 2


# formula / bound / construct ---------------------------------------------


def cmd_formula(args: argparse.Namespace) -> int:
    m, n, p, which = args.m, args.n, args.p, args.which
    if which == "bipartite":
        return _result(m, n, p, "bipartite", nu1_bipartite(m, n))
    if which == "balanced":
        return _result(m, n, p, "balanced", nu1_balanced(m, n))
    if p is None:
        raise UsageError("-p is required for --which auto|t1|t2")
    if which == "t1":
        value = nu1_theorem1(m, n, p)
    elif which == "t2":
        value = nu1_theorem2(m, n, p)
    else:
        which, value = nu1_special(m, n, p)
    return _result(m, n, p, which, value)


def _result(m, n, p, theorem, value) -> int:
    _emit({"m": m, "n": n, "p": p, "theorem": theorem, "value": str(value)})
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    _emit(total_lower_bound(args.m, args.n, args.p).to_dict())
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    report = certify(args.m, args.n, args.p)
    _emit(report.to_dict())
    return 0 if report.passed else 1


# search -------------------------------------------------------------------


def _spec_from_args(args: argparse.Namespace) -> PartitionSpec:
    if args.sizes is not None:
        return PartitionSpec.from_json(args.sizes)
    if None in (args.m, args.n, args.p):
        raise UsageError("give --sizes or all of -m, -n, -p")
    return PartitionSpec.special(args.m, args.n, args.p)


def cmd_exact(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    result = exact_min(spec, budget=args.budget, workers=None, allow_large=args.allow_large)
    _emit(result.to_dict())
    return 0


def cmd_heuristic(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    result = heuristic_min(
        spec, seed=args.seed, restarts=args.restarts, iters=args.iters, workers=None
    )
    _emit(result.to_dict())
    return 0


# verify -------------------------------------------------------------------


def _divisors(x: int) -> List[int]:
    return [d for d in range(1, x + 1) if x % d == 0]


def valid_ps(mn: int, max_p: int) -> List[int]:
    ps = set(_divisors(mn)) | set(range(mn, max_p + 1, mn))
    return sorted(p for p in ps if p <= max_p)


def instances(
    max_mn: Optional[int] = None, max_p: Optional[int] = None, max_vertices: Optional[int] = None
) -> Iterator[Instance]:
    """Every (m, n, p) with p | mn or mn | p inside the given limits, sorted."""
    if max_mn is None and max_vertices is None:
        raise UsageError("give --max-mn or --max-vertices")
    limit_mn = max_mn if max_mn is not None else max_vertices - 1
    if max_p is None:
        max_p = max_vertices - 1 if max_vertices is not None else 100
    for m in range(1, limit_mn + 1):
        for n in range(1, limit_mn // m + 1):
            for p in valid_ps(m * n, max_p):
                if max_vertices is None or p + m * n <= max_vertices:
                    yield m, n, p


def _row_formulas(inst: Instance) -> dict:
    m, n, p = inst
    value = closed_form_value(m, n, p)
    args = FormulaInput(m, n, p)
    checks: Dict[str, bool] = {"nonnegative_integer": isinstance(value, int) and value >= 0}
    if n == 1 and args.p_divides_mn:
        checks["bipartite"] = value == nu1_bipartite(p, m)
    if n == 1 and args.mn_divides_p:
        checks["bipartite"] = value == nu1_bipartite(m, p)
    if p == m:
        checks["balanced"] = value == nu1_balanced(m, n + 1)
    if p == m * n:
        checks["boundary"] = nu1_theorem1(m, n, p) == nu1_theorem2(m, n, p) == value
    return {"expected": value, "actual": value, "checks": checks, "pass": all(checks.values())}


def _row_bounds(inst: Instance) -> dict:
    expected = closed_form_value(*inst)
    actual = total_lower_bound(*inst).total
    return {"expected": expected, "actual": actual, "pass": expected == actual}


def _row_construct(inst: Instance) -> dict:
    expected = closed_form_value(*inst)
    report = certify(*inst)
    return {
        "expected": expected,
        "actual": report.crossings,
        "offset": report.offset,
        "pass": report.crossings == expected,
    }


def _row_exact(inst: Instance) -> dict:
    expected = closed_form_value(*inst)
    result = exact_min(PartitionSpec.special(*inst))
    ok = result.exact and result.min == expected
    return {"expected": expected, "actual": result.min, "pass": ok}


ROWS: Dict[str, Callable[[Instance], dict]] = {
    "formulas": _row_formulas,
    "bounds": _row_bounds,
    "construct": _row_construct,
    "exact": _row_exact,
}


def run_verify(mode: str, insts: Sequence[Instance], workers: int = 1) -> List[dict]:
    row_fn = ROWS[mode]
    if workers > 1 and len(insts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row_fn, insts))
    else:
        rows = [row_fn(i) for i in insts]
    out = []
    for (m, n, p), row in sorted(zip(insts, rows)):
        theorem = "t1" if (m * n) % p == 0 else "t2"
        out.append({"m": m, "n": n, "p": p, "theorem": theorem, **row})
    return out


def _stringify(row: dict) -> dict:
    return {k: (str(v) if k in ("expected", "actual") and v is not None else v) for k, v in row.items()}


def cmd_verify(args: argparse.Namespace) -> int:
    if args.mode in ("construct", "exact") and args.max_vertices is None:
        raise UsageError(f"--mode {args.mode} needs --max-vertices")
    if args.mode == "exact" and args.max_vertices > MAX_EXACT_VERTICES:
        raise UsageError(f"exact mode allows --max-vertices <= {MAX_EXACT_VERTICES}")
    if args.mode in ("formulas", "bounds") and args.max_mn is None and args.max_vertices is None:
        raise UsageError(f"--mode {args.mode} needs --max-mn or --max-vertices")
    insts = list(instances(args.max_mn, args.max_p, args.max_vertices))
    rows = [_stringify(r) for r in run_verify(args.mode, insts, resolve_workers(None))]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "p", "theorem", "expected", "actual", "pass"])
        for r in rows:
            writer.writerow([r["m"], r["n"], r["p"], r["theorem"], r["expected"], r["actual"],
                             "pass" if r["pass"] else "FAIL"])
        sys.stdout.write(buf.getvalue())
    else:
        for r in rows:
            _emit(r)
    failed = sum(not r["pass"] for r in rows)
    sys.stderr.write(json.dumps({"mode": args.mode, "rows": len(rows), "failed": failed}) + "\n")
    return 1 if failed else 0


# svg ----------------------------------------------------------------------


def cmd_svg(args: argparse.Namespace) -> int:
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    drawing = ConvexDrawing.from_json(text)
    svg = render_svg(drawing)
    if args.out in (None, "-"):
        sys.stdout.write(svg)
    else:
        with open(args.out, "w") as fh:
            fh.write(svg)
    return 0


# parser -------------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convex-crossings",
        description="Outerplanar crossing numbers of complete multipartite graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def mnp(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("-m", type=_positive_int, required=required, help="size of each small set")
        p.add_argument("-n", type=_positive_int, required=required, help="number of small sets")
        p.add_argument("-p", type=_positive_int, required=required, help="size of the special set")

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("-m", type=_positive_int, required=True)
    p.add_argument("-n", type=_positive_int, required=True)
    p.add_argument("-p", type=_positive_int)
    p.add_argument("--which", choices=["auto", "t1", "t2", "bipartite", "balanced"], default="auto")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("bound", help="lower-bound breakdown")
    mnp(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="build and certify the even drawing")
    mnp(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("exact", help="exhaustive minimum over circular orderings")
    mnp(p, required=False)
    p.add_argument("--sizes", help="partite-set sizes as a JSON array, e.g. [4,2,2]")
    p.add_argument("--budget", type=_positive_int, default=2_000_000,
                   help="maximum number of class sequences to enumerate")
    p.add_argument("--allow-large", action="store_true",
                   help=f"permit more than {MAX_EXACT_VERTICES} vertices")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("heuristic", help="hill climbing with random restarts")
    mnp(p, required=False)
    p.add_argument("--sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=_positive_int, default=20)
    p.add_argument("--iters", type=_positive_int, default=10_000)
    p.set_defaults(func=cmd_heuristic)

    p = sub.add_parser("verify", help="check many instances; exit 1 on any mismatch")
    p.add_argument("--mode", choices=sorted(ROWS), required=True)
    p.add_argument("--max-mn", type=_positive_int)
    p.add_argument("--max-p", type=_positive_int)
    p.add_argument("--max-vertices", type=_positive_int)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("svg", help="render a drawing JSON file as SVG")
    p.add_argument("input", help='drawing JSON path, or "-" for stdin')
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        return _fail(str(exc))
    except PreconditionError as exc:
        return _fail(str(exc), command=args.command)


if __name__ == "__main__":
    sys.exit(main())
