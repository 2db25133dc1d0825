"""Command-line front end.

Subcommands::

    linkseries euler    --ell 2 --dim 4 --max-degree 9 --format csv
    linkseries table    --ell 2 --dim 4 --p-max 4
    linkseries relative --ell 3 --dim 4 --max-degree 30
    linkseries growth   --ell 3 --dim 4 --max-degree 120 --tail 5
    linkseries verify   --prop 5.2 --ell-max 4 --j-max 8
    linkseries stirling --kind second --n-max 8

Exit status: 0 on success, 1 when a verification fails or the engine
reports an error, 2 on invalid arguments.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import combinatorics, engine
from .conf_poincare import ModelParams
from .errors import InconsistencyError, SlopeError
from .exact_arith import IntPolynomial

SUBCOMMANDS = ("euler", "table", "relative", "verify", "growth", "stirling")
FORMATS = ("text", "csv", "json")

DEFAULT_MAX_DEGREE = 30
DEFAULT_P_MAX = 5
DEFAULT_TAIL = 5

# verify targets; the numeric spellings are accepted for --prop
CHECKS = {
    "stirling-sum": "stirling-sum",
    "difference-sum": "difference-sum",
    "closed-form": "closed-form",
    "5.2": "stirling-sum",
    "5.3": "difference-sum",
    "5.1": "closed-form",
}


@dataclass
class Command:
    subcommand: str
    N: int = 4
    ell: int = 1
    max_degree: int = DEFAULT_MAX_DEGREE
    p_max: int = DEFAULT_P_MAX
    alpha: Fraction | None = None
    tail: int = DEFAULT_TAIL
    format: str = "text"
    output: str | None = None
    bounds: bool = False
    series: str = "relative"
    check: str = "stirling-sum"
    ell_max: int = 4
    j_max: int = 8
    degree_max: int = 8
    random_cases: int = 100
    seed: int = 0
    dims: tuple[int, ...] = (4, 5)
    kind: str = "first"
    n_max: int = 10


@dataclass
class Report:
    """Renderable result: tabular rows plus the JSON view of the same data."""

    title: str
    params: dict[str, Any]
    header: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)
    degrees: list = field(default_factory=list)
    coefficients: list = field(default_factory=list)
    meta: dict[str, Any] = field(default_factory=dict)
    summary: str | None = None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkseries",
        description="Euler series of the E1 page for spaces of long links.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def model(p, with_degree=True):
        p.add_argument("--ell", type=int, default=1, help="number of strings (>= 1)")
        p.add_argument("--dim", type=int, default=4, dest="N", help="ambient dimension N (>= 3)")
        if with_degree:
            p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, dest="max_degree")

    def output(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--output", "-o", default=None, help="output file (default: stdout)")

    for name in ("euler", "relative"):
        p = sub.add_parser(name)
        model(p)
        p.add_argument("--bounds", action="store_true",
                       help="report Tot(E2) lower bounds instead of the coefficients")
        p.add_argument("--alpha", type=_fraction, default=None,
                       help="lower slope (> 1); default: empirical slope of the E1 table")
        p.add_argument("--p-max", type=int, default=DEFAULT_P_MAX, dest="p_max")
        output(p)

    p = sub.add_parser("table")
    model(p, with_degree=False)
    p.add_argument("--p-max", type=int, default=DEFAULT_P_MAX, dest="p_max")
    output(p)

    p = sub.add_parser("growth")
    model(p)
    p.add_argument("--tail", type=int, default=DEFAULT_TAIL)
    p.add_argument("--series", choices=("relative", "euler", "knot"), default="relative")
    output(p)

    p = sub.add_parser("verify")
    p.add_argument("--prop", "--check", dest="check", choices=tuple(CHECKS), default="stirling-sum")
    p.add_argument("--ell-max", type=int, default=4, dest="ell_max")
    p.add_argument("--j-max", type=int, default=8, dest="j_max")
    p.add_argument("--degree-max", type=int, default=8, dest="degree_max",
                   help="largest d in the shifted rising factorial family")
    p.add_argument("--random-cases", type=int, default=100, dest="random_cases")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dims", type=_dims, default=(4, 5), help="ambient dimensions, e.g. 4,5")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, dest="max_degree")
    output(p)

    p = sub.add_parser("stirling")
    p.add_argument("--kind", choices=("first", "second", "eulerian2"), default="first")
    p.add_argument("--n-max", type=int, default=10, dest="n_max")
    output(p)
    return parser


def parse_args(argv: Sequence[str]) -> Command:
    """Parse and validate; invalid input exits with status 2."""
    parser = _build_parser()
    ns = parser.parse_args(list(argv))
    values = {k: v for k, v in vars(ns).items() if v is not None or k in ("alpha", "output")}
    if "check" in values:
        values["check"] = CHECKS[values["check"]]

    def bad(flag, msg):
        parser.error(f"argument {flag}: {msg}")

    if values.get("N", 4) < 3:
        bad("--dim", f"N must be >= 3, got {values['N']}")
    for key, flag, low in (
        ("ell", "--ell", 1),
        ("max_degree", "--max-degree", 0),
        ("p_max", "--p-max", 0),
        ("tail", "--tail", 1),
        ("ell_max", "--ell-max", 1),
        ("j_max", "--j-max", 1),
        ("degree_max", "--degree-max", 0),
        ("random_cases", "--random-cases", 0),
        ("n_max", "--n-max", 0),
    ):
        if key in values and values[key] < low:
            bad(flag, f"must be >= {low}, got {values[key]}")
    if values.get("alpha") is not None and values["alpha"] <= 1:
        bad("--alpha", f"lower slope must be > 1, got {values['alpha']}")
    if any(d < 3 for d in values.get("dims", ())):
        bad("--dims", "every N must be >= 3")
    return Command(**values)


# Report builders


def _model_params(cmd: Command) -> dict[str, Any]:
    return {"N": cmd.N, "ell": cmd.ell, "max_degree": cmd.max_degree}


def _series_report(title: str, cmd: Command, series, meta: dict) -> Report:
    params = ModelParams(cmd.N, cmd.ell)
    degrees = list(range(0, series.trunc + 1, params.step))
    coeffs = [series.coefficient(d) for d in degrees]
    return Report(title, _model_params(cmd), ("degree", "coefficient"),
                  rows=list(zip(degrees, coeffs)), degrees=degrees, coefficients=coeffs, meta=meta)


def _bounds_report(title: str, cmd: Command, series) -> Report:
    params = ModelParams(cmd.N, cmd.ell)
    alpha = cmd.alpha
    source = "given"
    if alpha is None:
        alpha, _ = engine.empirical_slopes(engine.e1_table(cmd.p_max, params))
        source = f"empirical lower slope, p_max={cmd.p_max}"
    rows, degrees, bounds = [], [], []
    for n in range(0, series.trunc + 1, params.step):
        bound, (lo, hi) = engine.tot_lower_bound(n, alpha, series)
        rows.append((n, bound, lo, hi))
        degrees.append(n)
        bounds.append(bound)
    meta = {"alpha": str(alpha), "alpha_source": source,
            "windows": [[r[2], r[3]] for r in rows]}
    return Report(title, _model_params(cmd), ("degree", "bound", "window_start", "window_end"),
                  rows=rows, degrees=degrees, coefficients=bounds, meta=meta)


def _euler(cmd: Command) -> Report:
    params = ModelParams(cmd.N, cmd.ell)
    rep = engine.euler_report(params, cmd.max_degree)
    if not rep.agree:
        raise InconsistencyError("summed and closed Euler series disagree")
    if cmd.bounds:
        return _bounds_report("euler series lower bounds", cmd, rep.closed)
    return _series_report("euler series of E1", cmd, rep.closed,
                          {"series": "euler", "summed_agrees": rep.agree})


def _relative(cmd: Command) -> Report:
    params = ModelParams(cmd.N, cmd.ell)
    series = engine.relative_series(params, cmd.max_degree)
    if cmd.ell == 1:
        return Report("relative euler series", _model_params(cmd), ("degree", "coefficient"),
                      rows=[("ALL", 0)], meta={"series": "relative",
                                               "note": "pair is trivial for ell=1"})
    if cmd.bounds:
        return _bounds_report("relative series lower bounds", cmd, series)
    return _series_report("relative euler series", cmd, series, {"series": "relative"})


def _table(cmd: Command) -> Report:
    params = ModelParams(cmd.N, cmd.ell)
    table = engine.e1_table(cmd.p_max, params)
    cells = list(table.lattice_cells())
    dims = [table[c] for c in cells]
    meta: dict[str, Any] = {}
    try:
        lower, upper = engine.empirical_slopes(table)
        meta = {"lower_slope": str(lower), "upper_slope": str(upper)}
    except SlopeError:
        meta = {"lower_slope": None, "upper_slope": None}
    return Report("E1 page dimensions", {"N": cmd.N, "ell": cmd.ell, "p_max": cmd.p_max},
                  ("p", "q", "dim"), rows=[(p, q, d) for (p, q), d in zip(cells, dims)],
                  degrees=[[p, q] for p, q in cells], coefficients=dims, meta=meta)


def _growth(cmd: Command) -> Report:
    params = ModelParams(cmd.N, cmd.ell)
    build = {"relative": engine.relative_series, "euler": engine.euler_series_closed,
             "knot": engine.knot_power_series}[cmd.series]
    series = build(params, cmd.max_degree)
    u_ratio, x_rate = engine.growth_rate(series, cmd.N, cmd.tail)
    lattice = engine.lattice_coefficients(series, cmd.N)
    window = lattice[-(cmd.tail + 1):]
    first = len(lattice) - len(window)
    degrees = [params.step * j for j in range(first, len(lattice))]
    p = _model_params(cmd) | {"tail": cmd.tail, "series": cmd.series}
    return Report("growth rate", p, ("quantity", "value"),
                  rows=[("u_ratio", repr(u_ratio)), ("x_rate", repr(x_rate))],
                  degrees=degrees, coefficients=window,
                  meta={"u_ratio": u_ratio, "x_rate": x_rate,
                        "expected_x_rate": cmd.ell ** (1.0 / (cmd.N - 1))})


def _verify_stirling_sum(cmd: Command):
    rows = []
    for ell in range(1, cmd.ell_max + 1):
        for j in range(1, cmd.j_max + 1):
            res = engine.check_stirling_sum(ell, j)
            rows.append((ell, j, res.lhs, res.rhs, res.ok))
    return ("ell", "j", "lhs", "rhs", "ok"), rows


def _verify_difference_sum(cmd: Command):
    rows = []
    for d in range(cmd.degree_max + 1):
        q = engine.shifted_rising_factorial(d)
        res = engine.check_difference_sum(q.coeffs)
        expected = (IntPolynomial((1, -1), "x") ** d).scale(math.factorial(d))
        ok = res.ok and res.s_poly == expected
        rows.append((f"rising-{d}", res.q_at_minus_one, sum(res.s_poly.coeffs), ok))
    rng = random.Random(cmd.seed)
    for i in range(cmd.random_cases):
        coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(0, 10) + 1)]
        res = engine.check_difference_sum(coeffs)
        rows.append((f"random-{i}", res.q_at_minus_one, sum(res.s_poly.coeffs), res.ok))
    return ("case", "q_at_minus_one", "sum", "ok"), rows


def _verify_closed_form(cmd: Command):
    rows = []
    for ell in range(1, cmd.ell_max + 1):
        for N in cmd.dims:
            rep = engine.euler_report(ModelParams(N, ell), cmd.max_degree)
            rows.append((ell, N, cmd.max_degree, rep.agree))
    return ("ell", "N", "max_degree", "ok"), rows


def _verify(cmd: Command) -> Report:
    header, rows = {
        "stirling-sum": _verify_stirling_sum,
        "difference-sum": _verify_difference_sum,
        "closed-form": _verify_closed_form,
    }[cmd.check](cmd)
    passed = sum(1 for r in rows if r[-1])
    status = "OK" if passed == len(rows) else "FAIL"
    params = {"check": cmd.check}
    if cmd.check == "stirling-sum":
        params |= {"ell_max": cmd.ell_max, "j_max": cmd.j_max}
    elif cmd.check == "difference-sum":
        params |= {"degree_max": cmd.degree_max, "random_cases": cmd.random_cases, "seed": cmd.seed}
    else:
        params |= {"ell_max": cmd.ell_max, "dims": list(cmd.dims), "max_degree": cmd.max_degree}
    return Report(f"verify {cmd.check}", params, header, rows=rows,
                  meta={"passed": passed, "total": len(rows), "ok": passed == len(rows)},
                  summary=f"{status} {passed}/{len(rows)} cases")


def _stirling(cmd: Command) -> Report:
    rows = []
    for n in range(cmd.n_max + 1):
        for k, v in enumerate(combinatorics.stirling_row(cmd.kind, n)):
            rows.append((n, k, v))
    return Report(f"{cmd.kind} triangle", {"kind": cmd.kind, "n_max": cmd.n_max},
                  ("n", "k", "value"), rows=rows, degrees=[[n, k] for n, k, _ in rows],
                  coefficients=[v for _, _, v in rows])


# Rendering


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        meta = dict(report.meta)
        if report.summary is not None:
            meta["summary"] = report.summary
        if report.header and not report.degrees and report.rows and "note" not in meta:
            meta["rows"] = [dict(zip(report.header, r)) for r in report.rows]
        doc = {"params": report.params, "degrees": report.degrees,
               "coefficients": report.coefficients, "meta": meta}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(report.header)
        for row in report.rows:
            writer.writerow([_cell(v) for v in row])
        return buf.getvalue()
    lines = []
    if report.summary is not None:
        lines.append(report.summary)
    params = " ".join(f"{k}={_cell(v)}" for k, v in report.params.items())
    lines.append(f"# {report.title}: {params}")
    table = [tuple(report.header)] + [tuple(_cell(v) for v in r) for r in report.rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(report.header))]
    for r in table:
        lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    for k, v in report.meta.items():
        if k in ("windows",):
            continue
        lines.append(f"# {k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


_BUILDERS = {
    "euler": _euler,
    "relative": _relative,
    "table": _table,
    "growth": _growth,
    "verify": _verify,
    "stirling": _stirling,
}


def run(cmd: Command, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    uses_model = cmd.subcommand in ("euler", "relative", "table", "growth")
    if (uses_model and cmd.N == 3) or (cmd.subcommand == "verify" and 3 in cmd.dims):
        print("warning: N=3 is below N >= 4; series are formal and convergence is not claimed",
              file=stderr)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = _BUILDERS[cmd.subcommand](cmd)
    except (ArithmeticError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    text = render(report, cmd.format)
    if cmd.output:
        with open(cmd.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if cmd.subcommand == "verify" and not report.meta["ok"]:
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    cmd = parse_args(sys.argv[1:] if argv is None else argv)
    return run(cmd)


if __name__ == "__main__":
    sys.exit(main())
