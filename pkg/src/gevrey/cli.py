"""``gevrey`` command-line front end.

Exit codes: 0 when every requested check passed, 1 when at least one
failed or was inconclusive, 2 for usage or parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from flint import acb

from . import borel, identities, relations, series
from .ball import (
    GevreyError,
    PrecisionContext,
    exact_decimal,
    max_bits_from_env,
    radius,
    rational_ball,
    short,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
WIRE_KEYS = ("id", "params", "lhs_mid", "lhs_rad", "rhs_mid", "rhs_rad", "gap", "status", "bits", "seconds")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    precision_bits: int = 128
    theta: float = 0.0
    output_path: str | None = None
    format: str = "text"

    def __post_init__(self) -> None:
        if self.precision_bits < 64:
            raise UsageError("--bits must be at least 64")
        if not math.isfinite(self.theta):
            raise UsageError("--theta must be finite")


# ---------------------------------------------------------------------------
# argument parsing helpers

_PI_FORM = re.compile(r"^\s*([+-]?)(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def parse_theta(text: str) -> float:
    """Radians as a decimal, or a multiple of pi such as ``pi/8`` or ``-3pi/4``."""
    m = _PI_FORM.match(text)
    if m:
        sign, coef, den = m.groups()
        value = (float(coef) if coef else 1.0) * math.pi / (float(den) if den else 1.0)
        return -value if sign == "-" else value
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot read direction {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError("direction must be finite")
    return value


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None


_COMPLEX = re.compile(r"^\s*([+-]?[^+-]+?)\s*([+-])\s*([^+-]*?)\s*[ij]\s*$")


def parse_point(text: str) -> Fraction | tuple[Fraction, Fraction]:
    """Rational ``p/q`` or decimal, or ``x+yi`` with rational parts."""
    m = _COMPLEX.match(text)
    if m:
        re_part, sign, im_part = m.groups()
        im = parse_rational(im_part or "1")
        return parse_rational(re_part), -im if sign == "-" else im
    if text.strip().rstrip("ij") != text.strip():
        im = text.strip()[:-1]
        return Fraction(0), parse_rational(im if im not in ("", "+", "-") else im + "1")
    return parse_rational(text)


def point_ball(z: Fraction | tuple[Fraction, Fraction], pctx: PrecisionContext) -> acb | Fraction:
    if isinstance(z, Fraction):
        return z
    with pctx.scoped():
        return acb(rational_ball(z[0]), rational_ball(z[1]))


def _bits(value: str) -> int:
    try:
        bits = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--bits expects an integer, got {value!r}") from None
    if bits < 64:
        raise argparse.ArgumentTypeError("--bits must be at least 64")
    return bits


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def _height(value: str) -> int:
    """Integer heights, also as ``10^12`` or ``1e12``."""
    text = value.strip().replace("**", "^")
    try:
        if "^" in text:
            base, exp = text.split("^")
            return int(base) ** int(exp)
        if "e" in text.lower():
            mant, exp = text.lower().split("e")
            return int(mant) * 10 ** int(exp)
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot read height {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gevrey", description="Ball-arithmetic checks of E-function and 1-summation identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, bits: int = 128) -> None:
        p.add_argument("--bits", type=_bits, default=bits, help="working precision in bits (>= 64)")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", default=None, help="write output here instead of stdout")

    p_eval = sub.add_parser("eval", help="evaluate an E-function")
    p_eval.add_argument("--family", choices=("eas", "exp", "i0"), default="eas")
    p_eval.add_argument("--a", type=parse_rational, default=Fraction(1))
    p_eval.add_argument("--s", type=int, default=1)
    p_eval.add_argument("--beta", type=parse_rational, default=Fraction(1))
    p_eval.add_argument("--z", type=parse_point, required=True)
    common(p_eval)

    p_sum = sub.add_parser("sum", help="1-sum of the divergent series with Borel kernel (1+x)^(a-1) log(1+x)^k")
    p_sum.add_argument("--a", type=parse_rational, required=True)
    p_sum.add_argument("--k", type=int, default=0)
    p_sum.add_argument("--z", type=parse_point, required=True)
    p_sum.add_argument("--theta", type=parse_theta, default=0.0, help="direction in radians or as pi/8")
    common(p_sum)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--suite", default="all", help="'all' or comma-separated ids such as I1,I3")
    p_verify.add_argument("--jobs", type=_positive_int, default=os.cpu_count() or 1)
    common(p_verify, bits=256)

    p_probe = sub.add_parser("probe", help="integer-relation probes")
    p_probe.add_argument("--kind", choices=("conjecture3", "mixed"), required=True)
    p_probe.add_argument("--a", type=parse_rational, default=Fraction(1))
    p_probe.add_argument("--s", type=int, default=1)
    p_probe.add_argument("--alpha", type=parse_rational, default=Fraction(1))
    p_probe.add_argument("--rho", type=parse_rational, default=Fraction(1))
    p_probe.add_argument("--digits", type=_positive_int, default=150)
    p_probe.add_argument("--height", type=_height, default=10**12)
    p_probe.add_argument("--format", choices=("json", "text"), default="text")
    p_probe.add_argument("--out", default=None)

    p_list = sub.add_parser("list", help="list the identity catalog")
    p_list.add_argument("--format", choices=("json", "text"), default="text")
    p_list.add_argument("--out", default=None)
    return parser


# ---------------------------------------------------------------------------
# output


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from None


def render_reports(reports: Sequence[identities.VerificationReport], fmt: str) -> str:
    rows = [r.to_wire() for r in reports]
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(WIRE_KEYS)
        for row in rows:
            params = ";".join(f"{k}={v}" for k, v in row["params"].items())
            writer.writerow([params if k == "params" else row[k] for k in WIRE_KEYS])
        return buf.getvalue()
    table = [("case", "status", "bits", "gap", "lhs", "seconds")]
    for r in reports:
        table.append(
            (
                r.label,
                r.status,
                str(r.bits),
                r.gap.str(3) if r.gap is not None else "-",
                short(r.lhs, 15) if r.lhs is not None else "-",
                f"{r.seconds:.2f}",
            )
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    for r in reports:
        if r.cause:
            lines.append(f"{r.label}: {r.cause}")
    return "\n".join(lines) + "\n"


def emit_report(reports: Sequence[identities.VerificationReport], fmt: str, path: str | None) -> None:
    if fmt in ("json", "csv") and not reports:
        raise UsageError("no reports to write")
    _write(render_reports(reports, fmt), path)


def _value_output(label: str, value: acb, bits: int, fmt: str) -> str:
    if fmt == "json":
        return (
            json.dumps(
                {
                    "quantity": label,
                    "re_mid": exact_decimal(value.real.mid()),
                    "im_mid": exact_decimal(value.imag.mid()),
                    "rad": exact_decimal(radius(value)),
                    "bits": str(bits),
                },
                indent=2,
            )
            + "\n"
        )
    if fmt == "csv":
        return (
            "quantity,re_mid,im_mid,rad,bits\n"
            f"{label},{exact_decimal(value.real.mid())},{exact_decimal(value.imag.mid())},{exact_decimal(radius(value))},{bits}\n"
        )
    digits = max(15, int(bits * 0.30103) - 8)
    return f"{label} = {short(value, digits)}\n"


# ---------------------------------------------------------------------------
# commands


def _check_cap(bits: int) -> None:
    cap = max_bits_from_env()
    if bits > cap:
        raise UsageError(f"--bits {bits} exceeds GEVREY_MAX_BITS={cap}")


def _cmd_eval(args: argparse.Namespace) -> int:
    _check_cap(args.bits)
    pctx = PrecisionContext(args.bits)
    if args.family == "eas":
        spec = series.EFunctionSpec.eas(args.a, args.s)
        label = f"E[{args.a},{args.s}]({_fmt_point(args.z)})"
    elif args.family == "exp":
        spec = series.EFunctionSpec.exp(args.beta)
        label = f"exp({args.beta} * {_fmt_point(args.z)})"
    else:
        spec = series.EFunctionSpec.bessel_i0()
        label = f"I0({_fmt_point(args.z)})"
    value = series.eval_E(spec, point_ball(args.z, pctx), pctx)
    _write(_value_output(label, value, args.bits, args.format), args.out)
    return EXIT_OK


def _fmt_point(z) -> str:
    if isinstance(z, Fraction):
        return str(z)
    return f"{z[0]}{'+' if z[1] >= 0 else '-'}{abs(z[1])}i"


def _cmd_sum(args: argparse.Namespace) -> int:
    _check_cap(args.bits)
    cfg = RunConfig("sum", args.bits, args.theta, args.out, args.format)
    pctx = PrecisionContext(cfg.precision_bits)
    spec = borel.AntiESpec(args.a, args.k)
    try:
        value = borel.laplace_sum(spec, point_ball(args.z, pctx), cfg.theta, pctx)
    except borel.DirectionError as exc:
        hint = f" (suggested --theta {exc.suggested!r})" if exc.suggested is not None and "suggested" not in str(exc) else ""
        raise UsageError(f"{exc}{hint}") from None
    label = f"phi[a={args.a},k={args.k},theta={cfg.theta:.6g}]({_fmt_point(args.z)})"
    _write(_value_output(label, value, cfg.precision_bits, cfg.format), cfg.output_path)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    _check_cap(args.bits)
    ids = None if args.suite.strip() == "all" else [s.strip() for s in args.suite.split(",") if s.strip()]
    try:
        identities.select(ids)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = identities.verify_all(ids, PrecisionContext(args.bits), jobs=args.jobs)
    emit_report(reports, args.format, args.out)
    for r in reports:
        if r.status != identities.PASS and args.out is not None:
            print(f"{r.label}: {r.status} {r.cause}", file=sys.stderr)
    return identities.exit_status(reports)


def _cmd_probe(args: argparse.Namespace) -> int:
    if args.kind == "conjecture3":
        result = relations.probe_conjecture3(args.a, args.s, args.digits, args.height)
    else:
        result = relations.probe_mixed_independence(args.alpha, args.rho, args.digits, args.height)
    if args.format == "json":
        text = json.dumps(result.to_wire(), indent=2) + "\n"
    else:
        rel = "-" if result.relation is None else "(" + ", ".join(map(str, result.relation)) + ")"
        text = (
            f"vector    ({', '.join(result.labels)})\n"
            f"verdict   {result.verdict}\n"
            f"relation  {rel}\n"
            f"height    {result.height_bound}\n"
            f"digits    {result.digits_used}\n"
            f"norm >=   {result.norm_bound:.6e}\n"
        )
    _write(text, args.out)
    return EXIT_FAIL if result.verdict == relations.INSUFFICIENT else EXIT_OK


def _cmd_list(args: argparse.Namespace) -> int:
    cases = identities.catalog()
    if args.format == "json":
        text = json.dumps(
            [{"id": c.id, "description": c.description, "instances": str(len(c.grid))} for c in cases], indent=2
        ) + "\n"
    else:
        width = max(len(c.id) for c in cases)
        text = "".join(f"{c.id.ljust(width)}  {len(c.grid):>2}  {c.description}\n" for c in cases)
    _write(text, args.out)
    return EXIT_OK


COMMANDS = {"eval": _cmd_eval, "sum": _cmd_sum, "verify": _cmd_verify, "probe": _cmd_probe, "list": _cmd_list}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"gevrey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GevreyError, ValueError) as exc:
        print(f"gevrey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


__all__ = ["RunConfig", "build_parser", "emit_report", "main", "parse_point", "parse_theta", "render_reports", "run"]
