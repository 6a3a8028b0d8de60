"""Command-line front end: problem files in, JSON reports and SVG out.

Problem files are JSON with exact values only::

    {
      "geometry": {
        "l_ab": "3", "l_ac": "4",
        "d_ab": {"re": "6", "im": "0"},
        "d_ac": {"re": "0", "im": "8"},
        "cis_beta": {"re": "0", "im": "1"}
      },
      "strokes": {"s_a": "2", "s_b": "7/2", "s_c": "5/2"}
    }

Rationals are strings ("p/q" or "p") so no value ever passes through a
float.  Reports are deterministic: rerunning the same input produces
byte-identical JSON once the single "timestamp" field (wall-clock data)
is removed.

Exit codes: 0 success, 1 usage error, 2 solver or input error.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from pathlib import Path

from .gaussrat import GaussianRational, parse_rational
from .groebner import PairLimitExceeded, buchberger
from .kinematics import (
    ManipulatorProblem,
    ShapePositionError,
    SolutionReport,
    solve_posture,
)
from .multipoly import PolyParseError, VAR_NAMES, parse_poly
from .rootfind import ConvergenceError
from .svgdraw import VertexMismatchError, render_posture

__all__ = [
    "ProblemFileError",
    "parse_problem",
    "problem_to_json",
    "report_to_json",
    "run_solve",
    "run_gb",
    "build_parser",
    "main",
]


class ProblemFileError(ValueError):
    """A problem file failed validation; message names the field."""


_GEOMETRY_RATIONALS = ("l_ab", "l_ac")
_GEOMETRY_COMPLEX = ("d_ab", "d_ac", "cis_beta")
_STROKES = ("s_a", "s_b", "s_c")


def _section(doc: dict, key: str) -> dict:
    if key not in doc:
        raise ProblemFileError(f"{key}: missing section")
    if not isinstance(doc[key], dict):
        raise ProblemFileError(f"{key}: expected an object")
    return doc[key]


def parse_problem(path) -> ManipulatorProblem:
    """Read and validate a problem file, exactly (no float intermediates)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFileError(f"{path}: {exc.strerror or exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{path}: invalid JSON ({exc})") from exc

    geometry = _section(doc, "geometry")
    strokes = _section(doc, "strokes")

    values = {}
    for key in _GEOMETRY_RATIONALS:
        if key not in geometry:
            raise ProblemFileError(f"geometry.{key}: missing")
        try:
            values[key] = parse_rational(str(geometry[key]))
        except ValueError as exc:
            raise ProblemFileError(f"geometry.{key}: {exc}") from exc
    for key in _GEOMETRY_COMPLEX:
        if key not in geometry:
            raise ProblemFileError(f"geometry.{key}: missing")
        try:
            values[key] = GaussianRational.from_json(geometry[key])
        except ValueError as exc:
            raise ProblemFileError(f"geometry.{key}: {exc}") from exc
    for key in _STROKES:
        if key not in strokes:
            raise ProblemFileError(f"strokes.{key}: missing")
        try:
            values[key] = parse_rational(str(strokes[key]))
        except ValueError as exc:
            raise ProblemFileError(f"strokes.{key}: {exc}") from exc

    try:
        return ManipulatorProblem(**values)
    except (TypeError, ValueError) as exc:
        raise ProblemFileError(str(exc)) from exc


def problem_to_json(problem: ManipulatorProblem) -> dict:
    return {
        "geometry": {
            "l_ab": str(problem.l_ab),
            "l_ac": str(problem.l_ac),
            "d_ab": problem.d_ab.to_json(),
            "d_ac": problem.d_ac.to_json(),
            "cis_beta": problem.cis_beta.to_json(),
        },
        "strokes": {
            "s_a": str(problem.s_a),
            "s_b": str(problem.s_b),
            "s_c": str(problem.s_c),
        },
    }


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def report_to_json(report: SolutionReport, *, emit_basis: bool = False) -> dict:
    doc = {
        "problem": problem_to_json(report.problem),
        "variable_order": list(VAR_NAMES),
        "eliminant": {
            "variable": VAR_NAMES[-1],
            "coefficients": [str(c) for c in report.eliminant.coefficients],
        },
        "eliminant_self_reciprocal": report.eliminant_self_reciprocal,
        "empty_variety": report.empty_variety,
        "solutions": [
            {
                "coords": [_complex_json(z) for z in t.coords],
                "physical": t.physical,
                "residual_max": t.residual_max,
            }
            for t in report.solutions
        ],
        "postures": [
            {
                "theta_a": p.theta_a,
                "theta_b": p.theta_b,
                "theta_c": p.theta_c,
                "alpha": p.alpha,
            }
            for p in report.postures
        ],
        "diagnostics": dict(report.diagnostics),
    }
    if emit_basis:
        doc["groebner_basis"] = [g.to_text() for g in report.basis.elements]
    doc["timestamp"] = {
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "elapsed_ms": {k: round(v, 3) for k, v in report.timings_ms.items()},
    }
    return doc


def run_solve(args) -> int:
    """Solve one problem file; write the report and optional SVG set."""
    try:
        problem = parse_problem(args.input)
        report = solve_posture(
            problem,
            tol_root=args.tol_root,
            tol_physical=args.tol_physical,
        )
        doc = report_to_json(report, emit_basis=args.emit_basis)
        payload = json.dumps(doc, indent=2) + "\n"

        if args.output:
            Path(args.output).write_text(payload, encoding="utf-8")
        else:
            sys.stdout.write(payload)

        if args.svg_dir:
            svg_dir = Path(args.svg_dir)
            svg_dir.mkdir(parents=True, exist_ok=True)
            k = 0
            physical = [t for t in report.solutions if t.physical]
            for t, posture in zip(physical, report.postures):
                k += 1
                svg = render_posture(problem, t, posture, title=f"posture {k}")
                (svg_dir / f"posture_{k}.svg").write_text(svg, encoding="utf-8")
    except (
        ProblemFileError,
        ShapePositionError,
        ConvergenceError,
        PairLimitExceeded,
        VertexMismatchError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def run_gb(args) -> int:
    """Read one polynomial per line, print the reduced monic lex basis."""
    try:
        text = Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: {args.input}: {exc.strerror or exc}", file=sys.stderr)
        return 2

    generators = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        try:
            generators.append(parse_poly(body))
        except PolyParseError as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return 2

    try:
        basis = buchberger(generators)
    except (ValueError, PairLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    for g in basis.elements:
        print(g.to_text())
    return 0


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this front end uses 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="parapose",
        description="Exact forward-position solver for planar 3RPR manipulators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a problem file")
    solve.add_argument("--input", required=True, help="problem JSON file")
    solve.add_argument("--output", help="report JSON path (default: stdout)")
    solve.add_argument("--svg-dir", help="directory for posture_<k>.svg files")
    solve.add_argument("--tol-root", type=float, default=1e-12,
                       help="root-residual tolerance (default 1e-12)")
    solve.add_argument("--tol-physical", type=float, default=1e-6,
                       help="unit-circle / conjugacy tolerance (default 1e-6)")
    solve.add_argument("--emit-basis", action="store_true",
                       help="include the Groebner basis in the report")
    solve.set_defaults(func=run_solve)

    gb = sub.add_parser("gb", help="print the reduced basis of a generator file")
    gb.add_argument("--input", required=True,
                    help="text file, one polynomial per line")
    gb.set_defaults(func=run_gb)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
