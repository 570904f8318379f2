"""Command-line interface: ``univoque {expand,dim,scan,fixtures,oracle}``.

Exit codes: 0 success, 1 failed fixture checks, 2 invalid input,
3 numerical failure (no root bracket, reduction or comparison limit hit).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Optional, TextIO

from . import fixtures as fx
from .config import Settings, resolve
from .expansions import BasePair, DomainError
from .kneading import PRESSURE_ROOT, BracketError, DimensionResult, analyse_bases, dimension, univoque_dimension
from .oracle import OracleLimitError, moran_estimate, oracle_report
from .scan import AxisRange, ScanRow, as_grid, continuity, scan
from .sequences import ComparisonLimitError, SequenceSyntaxError
from .subshift import Hole, ReductionLimitError, normalize

EXIT_OK, EXIT_FIXTURE, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3
CSV_HEADER = ["q0", "q1", "dim", "entropy", "case_tag", "exact"]


class InputError(ValueError):
    pass


# --- serialisable reports --------------------------------------------------


@dataclass
class ExpandReport:
    q0: float
    q1: float
    a: Optional[str]
    b: Optional[str]
    ell: Optional[str]
    r: Optional[str]
    admissible: Optional[bool]
    exact: bool
    case_tag: str
    dim: float
    entropy: Optional[float]


def expand(q: BasePair, settings: Settings) -> ExpandReport:
    res = univoque_dimension(q, settings.depth, settings.tol, settings.max_reductions)
    if res.case_tag == PRESSURE_ROOT:
        # non-overlapping bases: every point has one expansion, endpoints are not defined
        return ExpandReport(q.q0, q.q1, None, None, None, None, None, True, res.case_tag, res.value, res.entropy)
    an = analyse_bases(q, settings.depth, settings.tol, settings.max_reductions)
    ex = an.extremal
    return ExpandReport(
        q.q0, q.q1, str(an.a), str(an.b), str(ex.ell), str(ex.r), ex.admissible, an.exact, res.case_tag, res.value, res.entropy
    )


def dimension_to_dict(r: DimensionResult) -> dict:
    return {
        "value": r.value,
        "case_tag": r.case_tag,
        "root_bracket": None if r.root_bracket is None else list(r.root_bracket),
        "diagnostics": r.diagnostics,
        "approximate": r.approximate,
        "hole": None if r.hole is None else {"a": str(r.hole.a), "b": str(r.hole.b)},
        "entropy": r.entropy,
    }


def dimension_from_dict(d: dict) -> DimensionResult:
    hole = d.get("hole")
    bracket = d.get("root_bracket")
    return DimensionResult(
        value=d["value"],
        case_tag=d["case_tag"],
        root_bracket=None if bracket is None else tuple(bracket),
        diagnostics=dict(d.get("diagnostics", {})),
        approximate=d.get("approximate", False),
        hole=None if hole is None else Hole.parse(hole["a"], hole["b"]),
        entropy=d.get("entropy"),
    )


def render_json(obj) -> str:
    if isinstance(obj, DimensionResult):
        return json.dumps(dimension_to_dict(obj), sort_keys=True)
    if isinstance(obj, ScanRow):
        return json.dumps(_row_dict(obj), sort_keys=True)
    return json.dumps(asdict(obj), sort_keys=True)


def parse_json(text: str, kind: type):
    d = json.loads(text)
    if kind is DimensionResult:
        return dimension_from_dict(d)
    if kind is ScanRow:
        return ScanRow(**{k: (math.nan if v is None and k in ("dim", "entropy") else v) for k, v in d.items()})
    return kind(**d)


def _row_dict(row: ScanRow) -> dict:
    d = asdict(row)
    for k in ("dim", "entropy"):
        if isinstance(d[k], float) and math.isnan(d[k]):
            d[k] = None
    return d


# --- argument handling -----------------------------------------------------


def _bases(q0: float, q1: float) -> BasePair:
    if not (math.isfinite(q0) and math.isfinite(q1)):
        raise InputError("bases must be finite")
    try:
        return BasePair(q0, q1)
    except ValueError as e:
        raise InputError(str(e)) from None


def _hole(a: str, b: str) -> Hole:
    try:
        return Hole.parse(a, b)
    except (SequenceSyntaxError, ValueError) as e:
        raise InputError(str(e)) from None


def _settings(args) -> Settings:
    try:
        return resolve(
            tol=args.tol, depth=args.depth, threads=args.threads, oracle_depth=getattr(args, "oracle_depth", None), max_reductions=args.max_reductions
        )
    except ValueError as e:
        raise InputError(str(e)) from None


def _axis(values: list[float]) -> AxisRange:
    lo, hi, steps = values
    if steps != int(steps):
        raise ValueError(f"steps must be an integer, got {steps}")
    return AxisRange(lo, hi, int(steps))


def _g(x) -> str:
    return "nan" if x is None else f"{x:.12g}"


# --- commands --------------------------------------------------------------


def cmd_expand(args, out: TextIO) -> int:
    s = _settings(args)
    rep = expand(_bases(args.q0, args.q1), s)
    if args.json:
        print(render_json(rep), file=out)
        return EXIT_OK
    if rep.a is None:
        print(f"q0 + q1 < q0 q1: every point has a unique expansion (case {rep.case_tag}, dim {_g(rep.dim)})", file=out)
        return EXIT_OK
    print(f"a   = {rep.a}", file=out)
    print(f"b   = {rep.b}", file=out)
    print(f"ell = {rep.ell}", file=out)
    print(f"r   = {rep.r}", file=out)
    print(f"(a, b) admissible: {rep.admissible}", file=out)
    print(f"exact: {rep.exact}", file=out)
    if rep.case_tag == "full_interval_boundary":
        print("boundary case: q1 = q0/(q0-1), the univoque set has full dimension 1", file=out)
    elif rep.case_tag == "entropy_zero":
        print("entropy of (ell, r) is 0: univoque set has dimension 0", file=out)
    else:
        print(f"case {rep.case_tag}: entropy {_g(rep.entropy)}, dim {_g(rep.dim)}", file=out)
    return EXIT_OK


def cmd_dim(args, out: TextIO) -> int:
    s = _settings(args)
    q = _bases(args.q0, args.q1)
    if args.hole:
        h = _hole(*args.hole)
        res = dimension(h, q)
    else:
        res = univoque_dimension(q, s.depth, s.tol, s.max_reductions)
    moran = None
    if args.oracle is not None:
        if res.hole is None:
            raise InputError("--oracle needs a hole; this case has none")
        moran = moran_estimate(res.hole, q, args.oracle)
    if args.json:
        d = dimension_to_dict(res)
        if moran is not None:
            d["moran_estimate"] = {"depth": args.oracle, "s": moran}
        print(json.dumps(d, sort_keys=True), file=out)
        return EXIT_OK
    print(f"dim = {res.value!r}", file=out)
    print(f"case: {res.case_tag}", file=out)
    if res.hole is not None:
        print(f"hole: {res.hole.a}, {res.hole.b}", file=out)
    if res.root_bracket is not None:
        print(f"bracket: [{res.root_bracket[0]!r}, {res.root_bracket[1]!r}]  residual {res.diagnostics.get('residual', 0.0):.3g}", file=out)
    if res.entropy is not None:
        print(f"entropy = {res.entropy!r}  (beta = {math.exp(res.entropy)!r})", file=out)
    if res.approximate:
        print("approximate: endpoint expansions were truncated", file=out)
    if moran is not None:
        print(f"moran estimate (n={args.oracle}) = {moran!r}", file=out)
    return EXIT_OK


def _write_csv(rows: list[ScanRow], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([_g(r.q0), _g(r.q1), _g(r.dim), _g(r.entropy), r.case_tag, "true" if r.exact else "false"])


def cmd_scan(args, out: TextIO) -> int:
    s = _settings(args)
    try:
        r0, r1 = _axis(args.q0_range), _axis(args.q1_range)
    except ValueError as e:
        raise InputError(str(e)) from None
    done: list[ScanRow] = []
    interrupted = False
    try:
        rows = scan(r0, r1, s.threads, s.depth, s.tol, s.max_reductions, sink=done.append)
    except KeyboardInterrupt:
        rows = sorted(done, key=lambda r: (r.q0, r.q1))
        interrupted = True
    stats = continuity(as_grid(rows)) if args.continuity and rows else None
    target = open(args.output, "w", newline="") if args.output else out
    try:
        if args.format == "json":
            doc = {"rows": [_row_dict(r) for r in rows], "complete": not interrupted}
            if stats:
                doc["continuity"] = asdict(stats)
            json.dump(doc, target, sort_keys=True)
            target.write("\n")
        else:
            _write_csv(rows, target)
            if stats:
                target.write(f"# continuity max_jump={_g(stats.max_jump)} mean_jump={_g(stats.mean_jump)} at={stats.argmax} axis={stats.axis}\n")
            if interrupted:
                target.write("# interrupted: partial results\n")
    finally:
        if args.output:
            target.close()
    if interrupted:
        return 130
    return EXIT_NUMERIC if any(r.case_tag == "numerical_failure" for r in rows) else EXIT_OK


def cmd_fixtures(args, out: TextIO) -> int:
    names = args.names or list(fx.EXAMPLES)
    unknown = [n for n in names if n not in fx.EXAMPLES]
    if unknown:
        raise InputError(f"unknown fixtures {unknown}; choose from {list(fx.EXAMPLES)}")
    reports = [fx.EXAMPLES[n]() for n in names]
    if args.json:
        print(json.dumps([{"name": r.name, "passed": r.passed, "checks": [asdict(c) for c in r.checks]} for r in reports]), file=out)
    else:
        print(fx.summary(reports), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FIXTURE


def cmd_oracle(args, out: TextIO) -> int:
    s = _settings(args)
    q = _bases(args.q0, args.q1)
    if args.hole:
        h = _hole(*args.hole)
    else:
        res = univoque_dimension(q, s.depth, s.tol, s.max_reductions)
        if res.hole is None:
            raise InputError(f"case {res.case_tag} has no hole to enumerate; pass --hole")
        h = res.hole
    h = normalize(h)
    rep = oracle_report(h, q, s.oracle_depth, args.z)
    kd = dimension(h, q)
    if args.json:
        d = asdict(rep)
        d.update(hole={"a": str(h.a), "b": str(h.b)}, kneading_dim=kd.value, series_ok=rep.series_residuals.ok)
        print(json.dumps(d, sort_keys=True), file=out)
        return EXIT_OK
    sr = rep.series_residuals
    print(f"hole: {h.a}, {h.b}", file=out)
    print(f"#L_{rep.depth} = {rep.language_size}", file=out)
    print(f"entropy upper bound log(#L_n)/n = {rep.entropy_upper:.12g}", file=out)
    print(f"moran estimate s_{rep.depth} = {rep.dim_estimate:.12g}  (kneading dim {kd.value:.12g})", file=out)
    print(f"series residuals: L-AQ {sr.laq:.3g} <= {sr.laq_bound:.3g}, QK {sr.qk:.3g} <= {sr.qk_bound:.3g}: {'ok' if sr.ok else 'EXCEEDED'}", file=out)
    return EXIT_OK


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--depth", type=int, help="digit cap for endpoint expansions (env UNIVOQUE_DEPTH)")
    common.add_argument("--tol", type=float, help="orbit recurrence tolerance (env UNIVOQUE_TOL)")
    common.add_argument("--threads", type=int, help="worker processes for scans (env UNIVOQUE_THREADS)")
    common.add_argument("--max-reductions", type=int, help="cap on extremal-pair reductions (env UNIVOQUE_MAX_REDUCTIONS)")

    p = argparse.ArgumentParser(prog="univoque", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", parents=[common], help="endpoint expansions and extremal pair")
    e.add_argument("q0", type=float)
    e.add_argument("q1", type=float)
    e.set_defaults(func=cmd_expand)

    d = sub.add_parser("dim", parents=[common], help="Hausdorff dimension of the univoque set or of a hole")
    d.add_argument("q0", type=float)
    d.add_argument("q1", type=float)
    d.add_argument("--hole", nargs=2, metavar=("A", "B"), help="use the subshift of this hole instead")
    d.add_argument("--oracle", type=int, nargs="?", const=14, metavar="N", help="append the depth-N Moran estimate")
    d.set_defaults(func=cmd_dim)

    s = sub.add_parser("scan", parents=[common], help="evaluate the dimension on a grid")
    s.add_argument("--q0", dest="q0_range", nargs=3, type=float, required=True, metavar=("LO", "HI", "STEPS"))
    s.add_argument("--q1", dest="q1_range", nargs=3, type=float, required=True, metavar=("LO", "HI", "STEPS"))
    s.add_argument("--output", "-o", help="write to this file instead of stdout")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    fmt.add_argument("--json-rows", dest="format", action="store_const", const="json", help="JSON document instead of CSV")
    s.add_argument("--continuity", action="store_true", help="append adjacent-cell jump statistics")
    s.set_defaults(func=cmd_scan, format="csv")

    f = sub.add_parser("fixtures", parents=[common], help="run the worked-example regression suite")
    f.add_argument("names", nargs="*", help="subset of ex1..ex6")
    f.set_defaults(func=cmd_fixtures)

    o = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks for a hole")
    o.add_argument("q0", type=float)
    o.add_argument("q1", type=float)
    o.add_argument("--hole", nargs=2, metavar=("A", "B"))
    o.add_argument("-n", "--oracle-depth", type=int, help="word length (env UNIVOQUE_ORACLE_DEPTH)")
    o.add_argument("--z", type=float, default=0.3, help="series evaluation point z0 = z1")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[list[str]] = None, out: TextIO = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "scan" and args.json:
        args.format = "json"
    try:
        return args.func(args, out)
    except (InputError, DomainError, OracleLimitError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (BracketError, ReductionLimitError, ComparisonLimitError) as e:
        print(f"numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERIC


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
