"""Ball (midpoint-radius) arithmetic on top of Arb.

Every numeric result in the package is a ``flint.arb`` (real ball) or a
``flint.acb`` (complex ball, a pair of real balls).  This module adds the
small amount of policy the rest of the code relies on: precision scoping,
branch-cut refusal, exact rational conversion, refinement loops and exact
decimal serialization of midpoints and radii.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterator, Union

from flint import acb, arb, ctx, fmpq

Ball = arb
ComplexBall = acb

Number = Union[int, Fraction, arb, acb]

DEFAULT_MAX_BITS = 4096


class GevreyError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(GevreyError, ValueError):
    """An argument ball touches a pole, zero divisor or branch cut."""


class ParameterError(GevreyError, ValueError):
    """A parameter is outside the family's admissible set."""


class PrecisionExhausted(GevreyError):
    """Refinement hit its bit cap before reaching the requested radius."""

    def __init__(self, message: str, best: acb | arb | None = None, bits: int = 0):
        super().__init__(message)
        self.best = best
        self.bits = bits


def max_bits_from_env() -> int:
    raw = os.environ.get("GEVREY_MAX_BITS")
    if raw is None:
        return DEFAULT_MAX_BITS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParameterError(f"GEVREY_MAX_BITS must be an integer, got {raw!r}") from exc
    if value < 64:
        raise ParameterError("GEVREY_MAX_BITS must be at least 64")
    return value


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision plus the radius a caller wants on outputs.

    ``target_bits`` encodes the target radius as ``2**-target_bits``; when
    omitted it sits eight bits under the working precision.
    """

    work_bits: int = 128
    target_bits: int | None = None

    def __post_init__(self) -> None:
        if self.work_bits < 64:
            raise ParameterError(f"work_bits must be >= 64, got {self.work_bits}")
        if self.target_bits is None:
            object.__setattr__(self, "target_bits", self.work_bits - 8)

    @property
    def target_radius(self) -> arb:
        return arb(2) ** (-self.target_bits)

    def with_bits(self, bits: int) -> "PrecisionContext":
        """Same relative target, different working precision."""
        shift = self.work_bits - self.target_bits
        return replace(self, work_bits=bits, target_bits=bits - shift)

    def with_target(self, target_bits: int) -> "PrecisionContext":
        return replace(self, target_bits=target_bits)

    def guard(self, extra: int) -> "PrecisionContext":
        return replace(self, work_bits=self.work_bits + extra)

    @contextmanager
    def scoped(self) -> Iterator[None]:
        with ctx.workprec(self.work_bits):
            yield


# ---------------------------------------------------------------------------
# conversions


def as_fraction(x: int | str | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rational_ball(q: int | Fraction) -> arb:
    """Ball enclosing an exact rational at the current precision."""
    q = Fraction(q)
    if q.denominator == 1:
        return arb(q.numerator)
    return arb(fmpq(q.numerator, q.denominator))


def to_acb(x: Number | complex | float, pctx: "PrecisionContext | None" = None) -> acb:
    """Complex ball for ``x``; rationals are rounded at ``pctx`` (or the ambient) precision."""
    if isinstance(x, acb):
        return x
    if pctx is not None and not isinstance(x, arb):
        with pctx.scoped():
            return to_acb(x)
    if isinstance(x, arb):
        return acb(x)
    if isinstance(x, (int, Fraction)):
        return acb(rational_ball(x))
    if isinstance(x, complex):
        return acb(x.real, x.imag)
    return acb(x)


def to_arb(x: Number | float, pctx: "PrecisionContext | None" = None) -> arb:
    if isinstance(x, arb):
        return x
    if isinstance(x, acb):
        return x.real
    if pctx is not None:
        with pctx.scoped():
            return to_arb(x)
    if isinstance(x, (int, Fraction)):
        return rational_ball(x)
    return arb(x)


def error_ball(bound: arb) -> arb:
    """The ball ``[-bound, bound]`` (upper bound taken outward)."""
    return arb(0, bound.abs_upper())


def add_error(z: acb | arb, bound: arb) -> acb | arb:
    """Inflate the radius of ``z`` by ``bound`` in every component."""
    e = error_ball(bound)
    if isinstance(z, arb):
        return z + e
    return acb(z.real + e, z.imag + e)


def radius(z: acb | arb) -> arb:
    """Largest component radius, as an exact nonnegative ball."""
    if isinstance(z, arb):
        return z.rad()
    r, i = z.real.rad(), z.imag.rad()
    return r if r >= i else i


def contains_zero(z: acb | arb) -> bool:
    if isinstance(z, arb):
        return 0 in z
    return (0 in z.real) and (0 in z.imag)


def balls_intersect(x: acb | arb, y: acb | arb) -> bool:
    x, y = to_acb(x), to_acb(y)
    return x.real.overlaps(y.real) and x.imag.overlaps(y.imag)


def touches_branch_cut(z: acb) -> bool:
    """True when the ball meets the principal cut ``(-inf, 0]``."""
    return (0 in z.imag) and not (z.real.lower() > 0)


# ---------------------------------------------------------------------------
# operations


def arith(op: str, x: Number, y: Number, pctx: PrecisionContext) -> acb:
    x, y = to_acb(x, pctx), to_acb(y, pctx)
    with pctx.scoped():
        if op == "add":
            return x + y
        if op == "sub":
            return x - y
        if op == "mul":
            return x * y
        if op == "div":
            if contains_zero(y):
                raise DomainError("division by a ball containing 0")
            return x / y
    raise ParameterError(f"unknown operation {op!r}")


def elementary(
    fn: str,
    z: Number,
    pctx: PrecisionContext,
    p: int | Fraction | acb | None = None,
) -> acb:
    """Principal-branch ``exp``, ``log`` and ``pow_principal``.

    ``log`` and ``pow_principal`` refuse balls meeting ``(-inf, 0]``; the
    summation layer is responsible for rotating rays away from the cut.
    """
    z = to_acb(z, pctx)
    with pctx.scoped():
        if fn == "exp":
            return z.exp()
        if fn not in ("log", "pow_principal"):
            raise ParameterError(f"unknown function {fn!r}")
        if touches_branch_cut(z):
            raise DomainError(f"{fn} argument {z} meets the branch cut (-inf, 0]")
        if fn == "log":
            return z.log()
        if p is None:
            raise ParameterError("pow_principal needs an exponent")
        if isinstance(p, int) or (isinstance(p, Fraction) and p.denominator == 1):
            return z ** int(p)
        if isinstance(p, Fraction) and p.denominator == 2:
            return z.sqrt() ** p.numerator
        return z.pow(to_acb(p))


def refine(
    plan: Callable[[PrecisionContext], acb | arb],
    target_bits: int,
    start_bits: int = 64,
    max_bits: int | None = None,
) -> acb | arb:
    """Re-run ``plan`` with doubled precision until its radius is small enough."""
    cap = max_bits_from_env() if max_bits is None else max_bits
    bits = max(64, start_bits)
    target = arb(2) ** (-target_bits)
    best = None
    while True:
        pctx = PrecisionContext(work_bits=bits, target_bits=max(target_bits + 4, bits - 8))
        best = plan(pctx)
        if radius(best) <= target:
            return best
        if bits * 2 > cap:
            raise PrecisionExhausted(
                f"radius {radius(best).str(3)} > 2^-{target_bits} at {bits} bits (cap {cap})",
                best=best,
                bits=bits,
            )
        bits *= 2


# ---------------------------------------------------------------------------
# serialization


def exact_decimal(x: arb) -> str:
    """Exact decimal string of a binary floating-point ball midpoint/radius."""
    man, exp = x.man_exp()
    man, exp = int(man), int(exp)
    if exp >= 0:
        return str(man << exp)
    sign = "-" if man < 0 else ""
    digits = str(abs(man) * 5 ** (-exp))
    scale = -exp
    if len(digits) <= scale:
        digits = "0" * (scale - len(digits) + 1) + digits
    head, tail = digits[:-scale], digits[-scale:].rstrip("0")
    return f"{sign}{head}.{tail}" if tail else f"{sign}{head}"


def mid_decimal(x: arb) -> str:
    return exact_decimal(x.mid())


def rad_decimal(x: arb) -> str:
    return exact_decimal(x.rad())


def short(x: acb | arb, digits: int = 20) -> str:
    """Human-readable rendering used by the CLI text format."""
    # a zero-centred imaginary part no wider than the real radius is noise
    if isinstance(x, acb) and not (x.imag.mid() == 0 and x.imag.rad() <= max(x.real.rad(), arb(2) ** -60)):
        return f"{x.real.str(digits, radius=True)} + ({x.imag.str(digits, radius=True)})j"
    x = x.real if isinstance(x, acb) else x
    return x.str(digits, radius=True)
