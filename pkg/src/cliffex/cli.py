"""Command-line front end.

Subcommands: appell (print one Appell polynomial plus its coefficient
table), fueter (print one transformed monomial), verify (run a named
identity suite, nonzero exit on failure), compare (JSON comparison of
the two series extensions), eval (numeric evaluation of the closed
form or of a truncated extension at a point).

Output is deterministic: exact values print as p/q, floats through
repr, and JSON key order is fixed by construction.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import series, verify
from .appell import appell_polynomial, c_table
from .axial import evaluate, format_rational, text_form
from .clifford import Paravector
from .fueter import alpha_monomial, fueter_sce_monomial

SUITES = ("theorem1", "monogenic", "appell-property", "recurrence", "closed-form")


@dataclass
class RunConfig:
    """Everything one invocation needs, normalized from argparse."""

    command: str
    n: int = 3
    k: int = 0
    kmax: Optional[int] = None
    K: int = series.DEFAULT_K
    M: int = series.DEFAULT_K
    series_name: Optional[str] = None
    coeff_file: Optional[str] = None
    fmt: str = "text"
    tolerance: float = series.DEFAULT_TOLERANCE
    raw: bool = False
    suite: Optional[str] = None
    closed_form: bool = False
    gamma: Optional[Fraction] = None
    init: Optional[Tuple[Fraction, ...]] = None
    z: Optional[Fraction] = None
    point: Optional[Tuple[Fraction, ...]] = None


def _odd_dimension(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("n must be an integer")
    if value < 3 or value % 2 == 0:
        raise argparse.ArgumentTypeError("n must be odd (> 1)")
    return value


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("expected a rational like 2/3, got %r" % text)


def _rational_list(text: str) -> Tuple[Fraction, ...]:
    return tuple(_rational(part) for part in text.split(","))


def _fmt_float(value: float) -> str:
    return "%.15g" % value


def _paravector_text(mv) -> str:
    """Scalar-plus-vector multivector as one line of 15-digit floats."""
    parts = []
    scalar = float(mv.scalar_part())
    if scalar or mv.is_zero or not any(mv.vector_part()):
        parts.append(_fmt_float(scalar))
    for i, comp in enumerate(mv.vector_part()):
        if comp:
            parts.append("%s e%d" % (_fmt_float(float(comp)), i + 1))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def read_coefficient_file(path: str) -> series.SeriesSpec:
    """One rational per line, '#' starts a comment, blanks skipped.

    The index of a coefficient is its position among the non-comment
    lines, counting from zero.
    """
    values = []
    with open(path) as handle:
        for raw in handle:
            line = raw.split("#", 1)[0].strip()
            if line:
                values.append(Fraction(line))
    return series.from_coefficients(path, values)


def _resolve_series(config: RunConfig) -> series.SeriesSpec:
    if config.coeff_file:
        return read_coefficient_file(config.coeff_file)
    return series.get_series(config.series_name or "exp")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffex",
        description="Appell polynomials, the Fueter-Sce transform, and their comparison.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_appell = sub.add_parser("appell", help="print P_k^n and the c-coefficient table")
    p_appell.add_argument("--n", type=_odd_dimension, required=True)
    p_appell.add_argument("--k", type=int, required=True)
    p_appell.add_argument("--format", choices=("text", "json"), default="text")

    p_fueter = sub.add_parser("fueter", help="print the transformed monomial tau_n[z^k]")
    p_fueter.add_argument("--n", type=_odd_dimension, required=True)
    p_fueter.add_argument("--k", type=int, required=True)
    mode = p_fueter.add_mutually_exclusive_group()
    mode.add_argument("--raw", action="store_true", help="skip the alpha normalization")
    mode.add_argument("--normalized", action="store_true", help="normalize (default)")
    p_fueter.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run an identity suite; nonzero exit on failure")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--n", type=_odd_dimension, required=True)
    p_verify.add_argument("--kmax", type=int, default=None)
    p_verify.add_argument("--K", type=int, default=series.DEFAULT_K)
    p_verify.add_argument("--M", type=int, default=series.DEFAULT_K)
    p_verify.add_argument("--series", default="exp")
    p_verify.add_argument("--coeffs", help="coefficient file instead of a named series")
    p_verify.add_argument("--tolerance", type=float, default=series.DEFAULT_TOLERANCE)

    p_compare = sub.add_parser("compare", help="JSON comparison of tau and eta coefficients")
    p_compare.add_argument("--n", type=_odd_dimension, required=True)
    p_compare.add_argument("--series", default="exp")
    p_compare.add_argument("--coeffs")
    p_compare.add_argument("--K", type=int, default=series.DEFAULT_K)

    p_eval = sub.add_parser("eval", help="numeric evaluation")
    p_eval.add_argument("--n", type=_odd_dimension, required=True)
    what = p_eval.add_mutually_exclusive_group(required=True)
    what.add_argument("--closed-form", action="store_true")
    what.add_argument("--series")
    p_eval.add_argument("--gamma", type=_rational)
    p_eval.add_argument("--init", type=_rational_list, help="comma-separated a_0..a_(n-2)")
    p_eval.add_argument("--z", type=_rational)
    p_eval.add_argument("--point", type=_rational_list, help="comma-separated x0,x1,..,xn")
    p_eval.add_argument("--K", type=int, default=series.DEFAULT_K)
    p_eval.add_argument("--tolerance", type=float, default=series.DEFAULT_TOLERANCE)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    for name in (
        "n", "k", "K", "M", "tolerance", "raw", "suite", "gamma", "init", "z", "point",
    ):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(config, name, getattr(args, name))
    if getattr(args, "kmax", None) is not None:
        config.kmax = args.kmax
    if getattr(args, "format", None):
        config.fmt = args.format
    if getattr(args, "series", None):
        config.series_name = args.series
    if getattr(args, "coeffs", None):
        config.coeff_file = args.coeffs
    if getattr(args, "closed_form", False):
        config.closed_form = True
    return config


def cmd_appell(config: RunConfig) -> int:
    poly = appell_polynomial(config.n, config.k)
    table = c_table(config.n, config.k)
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "n": config.n,
                    "k": config.k,
                    "text": text_form(poly),
                    "polynomial": poly.to_json_dict(),
                    "c_table": [
                        {"k": j, "c": format_rational(c)} for j, c in enumerate(table)
                    ],
                },
                indent=2,
            )
        )
        return 0
    print(text_form(poly))
    for j, c in enumerate(table):
        print("c[%d] = %s" % (j, format_rational(c)))
    return 0


def cmd_fueter(config: RunConfig) -> int:
    normalized = not config.raw
    poly = fueter_sce_monomial(config.n, config.k, normalized=normalized)
    below = config.k < config.n - 1
    alpha = alpha_monomial(config.n, config.k) if normalized and not below else None
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "n": config.n,
                    "k": config.k,
                    "normalized": normalized,
                    "text": text_form(poly),
                    "polynomial": poly.to_json_dict(),
                    "alpha": None if alpha is None else format_rational(alpha),
                    "note": "k < n-1" if below else None,
                },
                indent=2,
            )
        )
        return 0
    print(text_form(poly))
    if below:
        print("note: k < n-1, tau_n[z^k] = 0")
    elif alpha is not None:
        print("alpha = %s" % format_rational(alpha))
    return 0


def cmd_verify(config: RunConfig) -> int:
    suite = config.suite
    kmax = config.kmax
    if suite == "theorem1":
        report = verify.verify_theorem1(config.n, 15 if kmax is None else kmax)
    elif suite == "monogenic":
        report = verify.verify_monogenic(config.n, 30 if kmax is None else kmax)
    elif suite == "appell-property":
        report = verify.verify_appell_property(config.n, 30 if kmax is None else kmax)
    elif suite == "recurrence":
        report = verify.verify_recurrence(config.n, _resolve_series(config), config.K)
    else:
        report = verify.verify_closed_form(config.n, config.M, config.tolerance)
    for line in report.lines:
        print(line)
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def cmd_compare(config: RunConfig) -> int:
    report = series.compare_extensions(config.n, _resolve_series(config), config.K)
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0


def cmd_eval(config: RunConfig) -> int:
    if config.closed_form:
        if config.gamma is None or config.init is None or config.z is None:
            raise ValueError("--closed-form needs --gamma, --init and --z")
        params = series.ClassParameters(config.n, config.gamma, config.init)
        value = series.closed_form_eval(params, config.z, tolerance=config.tolerance)
        print(format_rational(value) if isinstance(value, Fraction) else _fmt_float(value))
        return 0
    if config.point is None:
        raise ValueError("--series evaluation needs --point x0,x1,..,xn")
    if len(config.point) != config.n + 1:
        raise ValueError(
            "point needs n+1 = %d coordinates, got %d" % (config.n + 1, len(config.point))
        )
    spec = _resolve_series(config)
    extension = series.appell_extension(config.n, spec, config.K)
    x = Paravector(config.point[0], config.point[1:])
    print(_paravector_text(evaluate(extension.polynomial, x, mode="float")))
    return 0


_DISPATCH = {
    "appell": cmd_appell,
    "fueter": cmd_fueter,
    "verify": cmd_verify,
    "compare": cmd_compare,
    "eval": cmd_eval,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    try:
        return _DISPATCH[config.command](config)
    except (ValueError, series.ConvergenceError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
