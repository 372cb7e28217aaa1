"""
Command-line front end.

    alteuler gen --family alt-eulerian --n 5 --format csv
    alteuler check --suite all
    alteuler zeros --n 7 --format json
    alteuler bruteforce --stat altdes --n 6

Exit status: 0 success, 1 a check or certification failed, 2 usage error.
JSON output is one record per line: {"schema_version", "kind", "payload"}.
Integers are written as decimal strings and rationals as "num/den".
"""

from __future__ import annotations

import argparse
import enum
import json
import math
import sys
from fractions import Fraction
from typing import Any, Callable

from . import checks, egf, zeros
from .combinatorics import StatKind, stat_polynomial
from .errors import BruteForceLimitError, CertificationError
from .poly import Poly
from .report import CheckReport
from .sequences import Family, generate

SCHEMA_VERSION = "1"
ZEROS_MAX = 24

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def to_jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, Poly):
        return [to_jsonable(c) for c in obj.coeffs]
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def record(kind: str, payload: dict) -> str:
    body = {"schema_version": SCHEMA_VERSION, "kind": kind, "payload": to_jsonable(payload)}
    return json.dumps(body, sort_keys=True, separators=(",", ":"))


def _coeff_str(c) -> str:
    return f"{c.numerator}/{c.denominator}" if isinstance(c, Fraction) else str(c)


# -- gen ----------------------------------------------------------------------

def cmd_gen(args, out) -> int:
    try:
        row = generate(args.family, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    coeffs = row.poly.coeffs
    if args.format == "json":
        print(record("row", {"family": row.family, "n": row.n, "route": row.route,
                             "coeffs": list(coeffs)}), file=out)
    elif args.format == "csv":
        if args.header:
            print(",".join(f"x^{k}" for k in range(len(coeffs))), file=out)
        print(",".join(_coeff_str(c) for c in coeffs), file=out)
    else:
        print(row.poly.pretty(), file=out)
    return EXIT_OK


# -- check --------------------------------------------------------------------

def _interlacing_suite(n_max: int, tol: float) -> CheckReport:
    rep = CheckReport("interlacing")
    margins = {}
    for n in range(2, n_max):
        sub = zeros.check_interlacing(n, tol=tol)
        rep.merge(sub)
        margins[n] = sub.info["real_margin"]
    if margins:
        rep.info["min_real_margin"] = min(margins.values())
        rep.info["real_margins"] = margins
    return rep


# suite name -> (runner(n_max, tol), default n_max)
SUITES: dict[str, tuple[Callable[[int, float], CheckReport], int]] = {
    "routes": (lambda n, tol: checks.check_routes(n), 30),
    "prop1": (lambda n, tol: checks.check_prop1(n), 40),
    "corollary": (lambda n, tol: checks.check_corollary(n), 20),
    "egf-alt": (lambda n, tol: egf.check_egf_alt_eulerian(n), 12),
    "egf-deriv": (lambda n, tol: egf.check_egf_derivative(n), 12),
    "halfangle": (lambda n, tol: egf.check_half_angle_identity(n), 12),
    "stembridge": (lambda n, tol: checks.check_identity_suite("stembridge", n), 20),
    "wp": (lambda n, tol: checks.check_identity_suite("wp", n), 20),
    "anx-wnx": (lambda n, tol: checks.check_identity_suite("anx-wnx", n), 20),
    "equidistribution": (lambda n, tol: checks.check_equidistribution(n), 8),
    "convolution": (lambda n, tol: checks.check_convolution_recurrence(n), 12),
    "symmetry": (lambda n, tol: checks.check_identity_suite("symmetry", n), 30),
    "divisibility": (lambda n, tol: checks.check_identity_suite("divisibility", n), 30),
    "zeros-modulus": (lambda n, tol: zeros.check_unit_modulus(n, tol=tol if tol is not None else zeros.MODULUS_TOL), 24),
    "interlacing": (lambda n, tol: _interlacing_suite(n, tol if tol is not None else zeros.MARGIN_TOL), 24),
}


def _report_payload(rep: CheckReport, n_max: int) -> dict:
    return {
        "suite": rep.name,
        "n_max": n_max,
        "passed": rep.passed,
        "cases": len(rep.verdicts),
        "verdicts": [[label, ok] for label, ok in rep.verdicts],
        "counterexample": rep.counterexample,
        "info": rep.info,
        "notes": rep.notes,
    }


def cmd_check(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.n_max is not None and args.n_max < 1:
        raise UsageError("--n-max must be positive")
    all_ok = True
    for name in names:
        runner, default = SUITES[name]
        n_max = default if args.n_max is None else args.n_max
        try:
            rep = runner(n_max, args.tol)
        except (BruteForceLimitError, ValueError) as exc:
            raise UsageError(f"{name}: {exc}") from None
        except CertificationError as exc:
            rep = CheckReport(name)
            rep.record("certification", False, error=str(exc))
        all_ok &= rep.passed
        if args.format == "json":
            print(record("report", _report_payload(rep, n_max)), file=out)
        else:
            line = f"{rep.summary()} [n_max={n_max}]"
            for key in ("convention", "min_real_margin", "max_modulus_deviation", "aibi_margin"):
                if key in rep.info:
                    line += f" {key}={rep.info[key]}"
            print(line, file=out)
            if rep.counterexample is not None:
                print(f"  first counterexample: {json.dumps(to_jsonable(rep.counterexample), sort_keys=True)}", file=out)
    return EXIT_OK if all_ok else EXIT_FAILED


# -- zeros --------------------------------------------------------------------

def cmd_zeros(args, out) -> int:
    if not 2 <= args.n <= args.max_n:
        raise UsageError(f"--n must lie in [2, {args.max_n}]; Â_1 is constant and has no zeros")
    try:
        zr = zeros.alt_eulerian_zeros(args.n, args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except CertificationError as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.format == "json":
        print(record("zeros", {
            "n": zr.n,
            "zeros": [{"re": re, "im": im, "conjugate_pair": im > 0, "modulus": m, "residual": res}
                      for (re, im), m, res in zip(zr.zeros, zr.moduli, zr.residuals)],
            "has_minus_one": zr.has_minus_one,
            "source_label": zr.source_label,
            "source": list(zr.source),
            "residual_bound": zr.residual_bound,
        }), file=out)
    else:
        if args.header:
            print("re,im,conjugate_pair,modulus,residual", file=out)
        for (re, im), m, res in zip(zr.zeros, zr.moduli, zr.residuals):
            print(f"{re!r},{im!r},{int(im > 0)},{m!r},{res!r}", file=out)
    return EXIT_OK


# -- bruteforce ---------------------------------------------------------------

def cmd_bruteforce(args, out) -> int:
    try:
        poly = stat_polynomial(args.n, StatKind(args.stat), args.restrict_first)
    except (BruteForceLimitError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(record("row", {"stat": args.stat, "n": args.n, "restrict_first": args.restrict_first,
                             "route": "brute-force", "coeffs": list(poly.coeffs)}), file=out)
    elif args.format == "csv":
        print(",".join(str(c) for c in poly.coeffs), file=out)
    else:
        print(poly.pretty(), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alteuler", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print a coefficient row, low degree first")
    g.add_argument("--family", required=True, choices=[f.value for f in Family])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--format", choices=["json", "csv", "text"], default="csv")
    g.add_argument("--header", action="store_true", help="add column names to CSV output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="run an identity suite")
    c.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    c.add_argument("--n-max", type=int, default=None)
    c.add_argument("--tol", type=float, default=None)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_check)

    z = sub.add_parser("zeros", help="certified zeros of an alternating Eulerian polynomial")
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--tol", type=float, default=zeros.BISECTION_TOL)
    z.add_argument("--max-n", type=int, default=ZEROS_MAX)
    z.add_argument("--format", choices=["json", "csv"], default="json")
    z.add_argument("--header", action="store_true")
    z.set_defaults(func=cmd_zeros)

    b = sub.add_parser("bruteforce", help="distribution of a statistic by enumeration")
    b.add_argument("--stat", required=True, choices=[s.value for s in StatKind])
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--restrict-first", action="store_true", help="only permutations with pi(1) = 1")
    b.add_argument("--format", choices=["json", "csv", "text"], default="csv")
    b.set_defaults(func=cmd_bruteforce)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"alteuler: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
