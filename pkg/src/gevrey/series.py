"""Exact coefficient streams and tail-bounded evaluation of E-functions."""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from flint import acb, arb

from .ball import (
    DomainError,
    ParameterError,
    PrecisionContext,
    add_error,
    contains_zero,
    error_ball,
    radius,
    rational_ball,
    to_acb,
)

# inputs wider than this get the coefficient-growth bound instead of a Horner sum
WIDE_BALL = arb(1) / 16

# ---------------------------------------------------------------------------
# exact coefficients


def _check_eas_parameter(a: Fraction) -> None:
    if a.denominator == 1 and a <= 0:
        raise ParameterError(f"E_(a,s) needs a outside the nonpositive integers, got a={a}")


def coeff_Eas(a: Fraction | int, s: int, n: int) -> Fraction:
    """Taylor coefficient ``1/(n! (n+a)^s)`` of ``E_{a,s}``."""
    a = Fraction(a)
    _check_eas_parameter(a)
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")
    return 1 / (math.factorial(n) * (n + a) ** s)


@lru_cache(maxsize=256)
def _log1p_coeffs(N: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(0) if n == 0 else Fraction((-1) ** (n + 1), n) for n in range(N))


@lru_cache(maxsize=256)
def _binomial_series(p: Fraction, N: int) -> tuple[Fraction, ...]:
    out = [Fraction(1)]
    for n in range(1, N):
        out.append(out[-1] * (p - n + 1) / n)
    return tuple(out)


def _cauchy(x: Sequence[Fraction], y: Sequence[Fraction], N: int) -> list[Fraction]:
    return [sum((x[i] * y[n - i] for i in range(n + 1)), Fraction(0)) for n in range(N)]


@lru_cache(maxsize=512)
def powerlog_coeffs(a: Fraction, k: int, N: int) -> tuple[Fraction, ...]:
    """First ``N`` coefficients of ``(1+x)^(a-1) log(1+x)^k``."""
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    out = list(_binomial_series(Fraction(a) - 1, N))
    log_series = _log1p_coeffs(N)
    for _ in range(k):
        out = _cauchy(out, log_series, N)
    return tuple(out)


def coeff_powerlog(a: Fraction | int, k: int, n: int) -> Fraction:
    """``u_{a,k,n}``: coefficient of ``x^n`` in ``(1+x)^(a-1) log(1+x)^k``."""
    return powerlog_coeffs(Fraction(a), k, n + 1)[n]


def coeff_binomial(s: Fraction | int, n: int) -> Fraction:
    """Falling factorial ``s (s-1) ... (s-n+1)``."""
    s = Fraction(s)
    out = Fraction(1)
    for i in range(n):
        out *= s - i
    return out


# ---------------------------------------------------------------------------
# coefficient streams


@dataclass(eq=False)
class CoeffStream:
    """Exact Taylor coefficients with a growth bound ``|c_n| <= C rho^n / n!``."""

    gen: Callable[[int], Fraction]
    C: Fraction
    rho: Fraction
    name: str = "generic"
    _cache: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        self.C = Fraction(self.C)
        self.rho = Fraction(self.rho)
        if self.C < 0 or self.rho < 0:
            raise ParameterError("growth constants must be nonnegative")

    def __call__(self, n: int) -> Fraction:
        with self._lock:
            c = self._cache.get(n)
        if c is None:
            c = Fraction(self.gen(n))
            with self._lock:
                self._cache[n] = c
        return c

    def growth_holds(self, n: int) -> bool:
        return abs(self(n)) * math.factorial(n) <= self.C * self.rho**n

    def balls(self, N: int, prec: int) -> list[arb]:
        """Coefficients ``0..N-1`` as balls at ``prec`` bits (cached)."""
        key = ("balls", prec)
        with self._lock:
            cached = self._cache.get(key)
        if cached is not None and len(cached) >= N:
            return cached[:N]
        coeffs = [rational_ball(self(n)) for n in range(N)]
        with self._lock:
            self._cache[key] = coeffs
        return coeffs


def shifted_derivative_stream(stream: CoeffStream, order: int) -> CoeffStream:
    """Coefficients of the ``order``-th derivative."""
    if order == 0:
        return stream
    falling = lambda n: math.factorial(n + order) // math.factorial(n)  # noqa: E731
    return CoeffStream(
        lambda n: stream(n + order) * falling(n),
        stream.C * stream.rho**order,
        stream.rho,
        name=f"D^{order} {stream.name}",
    )


def _eas_growth(a: Fraction, s: int) -> Fraction:
    worst = Fraction(1)
    for n in range(0, max(0, math.ceil(-a)) + 2):
        d = abs(n + a)
        worst = max(worst, 1 / d**s)
    return worst


@dataclass(frozen=True, eq=False)
class EFunctionSpec:
    """A named E-function family together with its coefficient stream."""

    family: str
    params: tuple
    stream: CoeffStream

    @classmethod
    def eas(cls, a: Fraction | int, s: int) -> "EFunctionSpec":
        a = Fraction(a)
        _check_eas_parameter(a)
        if s < 1:
            raise ParameterError(f"s must be >= 1, got {s}")
        stream = CoeffStream(lambda n: coeff_Eas(a, s, n), _eas_growth(a, s), 1, name=f"E[{a},{s}]")
        return cls("Eas", (a, s), stream)

    @classmethod
    def exp(cls, beta: Fraction | int = 1) -> "EFunctionSpec":
        beta = Fraction(beta)
        stream = CoeffStream(
            lambda n: beta**n / math.factorial(n), 1, abs(beta), name=f"exp({beta}z)"
        )
        return cls("Exp", (beta,), stream)

    @classmethod
    def bessel_i0(cls) -> "EFunctionSpec":
        def gen(n: int) -> Fraction:
            if n % 2:
                return Fraction(0)
            m = n // 2
            return Fraction(1, 4**m * math.factorial(m) ** 2)

        return cls("BesselI0", (), CoeffStream(gen, 1, 1, name="I0"))

    @classmethod
    def generic(cls, stream: CoeffStream) -> "EFunctionSpec":
        return cls("Generic", (stream.name,), stream)

    def derivative(self, order: int) -> "EFunctionSpec":
        if order < 0:
            raise ParameterError("derivative order must be >= 0")
        if order == 0:
            return self
        return EFunctionSpec(self.family, self.params + (("D", order),), shifted_derivative_stream(self.stream, order))


def z_times_eas_minus(a: Fraction | int, s: int) -> EFunctionSpec:
    """``z E_{a,s}(-z)`` as a generic E-function."""
    base = EFunctionSpec.eas(a, s).stream

    def gen(n: int) -> Fraction:
        return Fraction(0) if n == 0 else (-1) ** (n - 1) * base(n - 1)

    # m rho^(m-1) <= (2 max(rho, 1))^m keeps the growth bound valid after the shift
    rho = 2 * max(base.rho, Fraction(1))
    return EFunctionSpec.generic(CoeffStream(gen, base.C, rho, name=f"zE[{a},{s}](-z)"))


# ---------------------------------------------------------------------------
# evaluation


@dataclass(frozen=True)
class TailBound:
    N: int
    bound: arb


def tail_bound(stream: CoeffStream, zabs: arb, N: int) -> arb:
    """Upper bound for ``|sum_{n>=N} c_n z^n|`` given ``|z| <= zabs``."""
    x = rational_ball(stream.rho) * zabs
    ratio = x / (N + 1)
    if not ratio < 1:
        return arb("inf")
    head = rational_ball(stream.C) * x**N / arb.fac_ui(N)
    return (head / (1 - ratio)).upper()


def choose_truncation(stream: CoeffStream, zabs: arb, target: arb) -> TailBound:
    """Smallest ``N`` past ``2 rho |z|`` whose tail is at most ``target/4``."""
    x = float((rational_ball(stream.rho) * zabs).upper())
    N = max(1, int(math.floor(2 * x)) + 1)
    goal = target / 4
    bound = tail_bound(stream, zabs, N)
    step = 1
    while not bound <= goal:
        N += step
        step = min(step * 2, 64)
        bound = tail_bound(stream, zabs, N)
    while N > 1:
        lower = tail_bound(stream, zabs, N - 1)
        if not lower <= goal or N - 1 <= 2 * x:
            break
        N, bound = N - 1, lower
    return TailBound(N, bound)


def _horner(coeffs: list[arb], z: acb) -> acb:
    acc = acb(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def eval_E(spec: EFunctionSpec, z, pctx: PrecisionContext) -> acb:
    """Enclosure of the entire series at ``z`` (partial sum plus certified tail)."""
    z = to_acb(z, pctx)
    stream = spec.stream
    zabs = z.abs_upper()
    if radius(z) > WIDE_BALL:
        # wide inputs (quadrature error estimates) only need |E(z)| <= C exp(rho |z|)
        with pctx.scoped():
            bound = rational_ball(stream.C) * (rational_ball(stream.rho) * zabs).exp()
            return acb(error_ball(bound), error_ball(bound))
    # terms grow like exp(rho|z|) before cancelling; pay for that in guard bits
    guard = 16 + int(float((rational_ball(stream.rho) * zabs).upper()) * 1.45)
    with pctx.guard(guard).scoped():
        tb = choose_truncation(stream, zabs, pctx.target_radius)
        value = _horner(stream.balls(tb.N, pctx.work_bits + guard), z)
        value = add_error(value, tb.bound)
    with pctx.scoped():
        return +value


def deriv_E(spec: EFunctionSpec, z, order: int, pctx: PrecisionContext) -> acb:
    return eval_E(spec.derivative(order), z, pctx)


# ---------------------------------------------------------------------------
# psi_j(z) = e^z E_{a,j}(-z)


def psi(a: Fraction | int, j: int, z, pctx: PrecisionContext) -> acb:
    z = to_acb(z, pctx)
    if j == 0:
        return acb(1)
    e = eval_E(EFunctionSpec.eas(a, j), -z, pctx)
    with pctx.scoped():
        return z.exp() * e


def psi_deriv(a: Fraction | int, j: int, z, order: int, pctx: PrecisionContext) -> acb:
    """``order``-th derivative of ``psi_j`` by Leibniz on ``e^z * E(-z)``."""
    z = to_acb(z, pctx)
    if j == 0:
        return acb(1 if order == 0 else 0)
    spec = EFunctionSpec.eas(a, j)
    terms = [deriv_E(spec, -z, i, pctx) for i in range(order + 1)]
    with pctx.scoped():
        total = acb(0)
        for i, t in enumerate(terms):
            total += math.comb(order, i) * (-1) ** i * t
        return z.exp() * total


def psi_residual(a: Fraction | int, j: int, z, pctx: PrecisionContext) -> acb:
    """``psi_j' - (1 - a/z) psi_j - psi_{j-1}/z``; encloses zero when the recurrence holds."""
    z = to_acb(z, pctx)
    if j < 1:
        raise ParameterError("j must be >= 1")
    if contains_zero(z):
        raise DomainError("psi recurrence is singular at z = 0")
    a = Fraction(a)
    d = psi_deriv(a, j, z, 1, pctx)
    p = psi(a, j, z, pctx)
    q = psi(a, j - 1, z, pctx)
    with pctx.scoped():
        return d - (1 - rational_ball(a) / z) * p - q / z


# ---------------------------------------------------------------------------
# Wronskians


@dataclass(frozen=True)
class FunctionHandle:
    """An analytic function with access to its derivatives."""

    name: str
    deriv: Callable[[acb, int, PrecisionContext], acb]

    def eval(self, z, pctx: PrecisionContext) -> acb:
        return self.deriv(to_acb(z, pctx), 0, pctx)

    @classmethod
    def one(cls) -> "FunctionHandle":
        return cls("1", lambda z, k, p: acb(1 if k == 0 else 0))

    @classmethod
    def exp(cls) -> "FunctionHandle":
        def d(z, k, p):
            with p.scoped():
                return to_acb(z).exp()

        return cls("exp", d)

    @classmethod
    def efunction(cls, spec: EFunctionSpec) -> "FunctionHandle":
        return cls(spec.stream.name, lambda z, k, p: deriv_E(spec, z, k, p))

    @classmethod
    def psi(cls, a: Fraction | int, j: int) -> "FunctionHandle":
        return cls(f"psi[{a},{j}]", lambda z, k, p: psi_deriv(a, j, z, k, p))


def ball_det(matrix: Sequence[Sequence[acb]]) -> acb:
    """Determinant by Laplace expansion along the first row (no pivot division).

    Memoised over column subsets so an m x m determinant costs O(m 2^m).
    """
    m = len(matrix)
    memo: dict[tuple[int, int], acb] = {}

    def minor(row: int, cols: int) -> acb:
        if row == m:
            return acb(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = acb(0)
        sign = 1
        for c in range(m):
            if cols >> c & 1:
                continue
            total += sign * matrix[row][c] * minor(row + 1, cols | (1 << c))
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


def wronskian_det(fns: Sequence[FunctionHandle], z0, pctx: PrecisionContext) -> acb:
    m = len(fns)
    if not 1 <= m <= 8:
        raise ParameterError(f"Wronskian supports 1..8 functions, got {m}")
    z0 = to_acb(z0, pctx)
    rows = [[f.deriv(z0, k, pctx) for f in fns] for k in range(m)]
    with pctx.scoped():
        return ball_det(rows)


__all__ = [
    "CoeffStream",
    "EFunctionSpec",
    "FunctionHandle",
    "TailBound",
    "ball_det",
    "choose_truncation",
    "coeff_Eas",
    "coeff_binomial",
    "coeff_powerlog",
    "deriv_E",
    "eval_E",
    "powerlog_coeffs",
    "psi",
    "psi_deriv",
    "psi_residual",
    "tail_bound",
    "wronskian_det",
    "z_times_eas_minus",
]
