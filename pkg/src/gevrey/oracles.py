"""Reference constants computed without any of the relations under test.

pi and log come from fixed-point arctangent / inverse-hyperbolic-tangent
series with explicit truncation and rounding budgets, Euler's constant from
the Brent-McMillan Bessel-ratio scheme, and Gamma from a shifted Stirling
series with the classical remainder bound.  Nothing here imports the
summation module or the ``E_{a,s}`` series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from flint import acb, arb, fmpq

from .ball import ParameterError, PrecisionContext, add_error, rational_ball, to_acb
from .cauchy import cauchy_derivative


@dataclass(frozen=True)
class OracleResult:
    value: arb
    method: str


def _fixed_ball(value: int, err_ulps: int, bits: int) -> arb:
    """Ball ``value * 2^-bits`` with radius ``err_ulps * 2^-bits``."""
    mid = arb(value) * arb(2) ** (-bits)
    return add_error(mid, arb(err_ulps) * arb(2) ** (-bits))


def _atan_inv_fixed(q: int, bits: int) -> tuple[int, int]:
    """``atan(1/q) * 2^bits`` as (value, error in ulps) for integer ``q >= 2``."""
    one = 1 << bits
    power = one // q  # q^-(2n+1), floored
    q2 = q * q
    total, n, err = 0, 0, 1
    while power:
        term = power // (2 * n + 1)
        total += term if n % 2 == 0 else -term
        err += 2
        power //= q2
        n += 1
    # alternating tail below one ulp once power hits 0
    return total, err + 1


def _atanh_fixed(p: int, q: int, bits: int) -> tuple[int, int]:
    """``atanh(p/q) * 2^bits`` for ``0 <= p < q``, with error in ulps."""
    one = 1 << bits
    power = (one * p) // q
    ratio_num, ratio_den = p * p, q * q
    total, n, err = 0, 0, 1
    while power:
        total += power // (2 * n + 1)
        err += n + 2
        power = (power * ratio_num) // ratio_den
        n += 1
    # remaining tail: geometric with ratio (p/q)^2 on terms already below one ulp
    tail = math.ceil(1 / (1 - (p / q) ** 2)) + 1
    return total, err + tail


def pi_oracle(pctx: PrecisionContext) -> arb:
    """Machin: ``pi = 16 atan(1/5) - 4 atan(1/239)``."""
    bits = pctx.work_bits + 32
    a, ea = _atan_inv_fixed(5, bits)
    b, eb = _atan_inv_fixed(239, bits)
    with pctx.scoped():
        return _fixed_ball(16 * a - 4 * b, 16 * ea + 4 * eb, bits)


@lru_cache(maxsize=64)
def _log2_fixed(bits: int) -> tuple[int, int]:
    v, e = _atanh_fixed(1, 3, bits)
    return 2 * v, 2 * e


def log_oracle(x: Fraction | int, pctx: PrecisionContext) -> arb:
    """``log x = e log 2 + 2 atanh((m-1)/(m+1))`` with ``x = 2^e m``, ``m`` in [2/3, 4/3]."""
    x = Fraction(x)
    if x <= 0:
        raise ParameterError(f"log_oracle needs x > 0, got {x}")
    if x == 1:
        return arb(0)
    e = x.numerator.bit_length() - x.denominator.bit_length()
    m = x / Fraction(2) ** e
    while m > Fraction(4, 3):
        m /= 2
        e += 1
    while m < Fraction(2, 3):
        m *= 2
        e -= 1
    bits = pctx.work_bits + 32 + max(0, abs(e)).bit_length()
    y = (m - 1) / (m + 1)
    total, err = 0, 0
    if y:
        v, ev = _atanh_fixed(abs(y.numerator), y.denominator, bits)
        total += 2 * v if y > 0 else -2 * v
        err += 2 * ev
    if e:
        l2, el2 = _log2_fixed(bits)
        total += e * l2
        err += abs(e) * el2
    with pctx.scoped():
        return _fixed_ball(total, err, bits)


def euler_gamma_oracle(pctx: PrecisionContext) -> arb:
    """Brent-McMillan: ``gamma = A/B - log n + O(pi e^{-4n})``.

    ``A = sum (n^k/k!)^2 (H_k - log n)``, ``B = sum (n^k/k!)^2``; both sums
    are cut at ``k = K`` past the peak, with a geometric bound on the rest.
    """
    target_bits = pctx.target_bits + 8
    n = math.ceil((target_bits + 4) * math.log(2) / 4) + 1
    K = math.ceil(3.6 * n) + 10
    inner = pctx.guard(32 + int(2 * n * 1.45))
    logn = log_oracle(n, inner)
    with inner.scoped():
        term = arb(1)
        H = arb(0)
        A = -logn
        B = arb(1)
        for k in range(1, K + 1):
            term = term * n * n / (k * k)
            H += arb(1) / k
            A += term * (H - logn)
            B += term
        # tail k > K: term ratio n^2/k^2 <= r < 1; |H_k - log n| <= k + log n
        r = arb(n * n) / ((K + 1) * (K + 1))
        nxt = term * r
        tail_B = nxt / (1 - r)
        tail_A = nxt * (K + 1 + logn) / (1 - r * (K + 2) / (K + 1)) if r * (K + 2) / (K + 1) < 1 else arb("inf")
        ratio = A / B
        err = (tail_A + abs(ratio) * tail_B) / B
    pi = pi_oracle(inner)
    with inner.scoped():
        bm = pi * (-4 * arb(n)).exp()
        value = add_error(ratio, err + bm)
    with pctx.scoped():
        return +value


# ---------------------------------------------------------------------------
# Gamma


@lru_cache(maxsize=512)
def _bernoulli(n: int) -> Fraction:
    b = fmpq.bernoulli(n)
    return Fraction(int(b.p), int(b.q))


def _stirling_plan(target_bits: int, re_lower: float) -> tuple[int, int]:
    """Shift ``m`` and number of terms ``N`` for a given relative target."""
    x = max(8.0, 0.25 * target_bits)
    m = max(0, math.ceil(x - re_lower))
    xs = re_lower + m
    # first omitted term |B_2N| / (2N (2N-1) x^(2N-1)) in log2
    N = 1
    while True:
        b = abs(_bernoulli(2 * N))
        log2_term = (
            math.log2(b.numerator) - math.log2(b.denominator) - math.log2(2 * N * (2 * N - 1)) - (2 * N - 1) * math.log2(xs)
        )
        if log2_term < -(target_bits + 8):
            return m, N
        N += 1
        if N > 4 * target_bits:
            raise ParameterError("Stirling plan failed to converge")


def _log_gamma_stirling(w: acb, N: int, log2pi_half: arb) -> acb:
    """Stirling sum with ``N - 1`` correction terms plus the remainder bound."""
    logw = w.log()
    total = (w - arb(1) / 2) * logw - w + log2pi_half
    inv = 1 / w
    inv2 = inv * inv
    power = inv
    for j in range(1, N):
        b = _bernoulli(2 * j)
        total += rational_ball(b / (2 * j * (2 * j - 1))) * power
        power *= inv2
    # |R_N| <= |B_2N| / (2N (2N-1) |w|^(2N-1)) * sec(arg w / 2)^(2N)
    cos_arg = w.real / w.abs_upper()
    cos_half_sq = (1 + cos_arg.lower()) / 2
    b = abs(_bernoulli(2 * N))
    bound = rational_ball(b / (2 * N * (2 * N - 1))) / w.abs_lower() ** (2 * N - 1) / cos_half_sq**N
    return add_error(total, bound)


def gamma_ball(w, pctx: PrecisionContext) -> acb:
    """Gamma at a complex ball with positive real part, via shifted Stirling."""
    w = to_acb(w, pctx)
    with pctx.scoped():
        re_lower = float(w.real.lower())
    if not re_lower > 0:
        raise ParameterError("gamma oracle covers Re w > 0 only")
    target_bits = pctx.target_bits + 8
    m, N = _stirling_plan(target_bits, re_lower)
    inner = pctx.guard(16 + m.bit_length() * 2 + 16)
    pi = pi_oracle(inner)
    with inner.scoped():
        log2pi_half = (2 * pi).log() / 2
        shifted = w + m
        lg = _log_gamma_stirling(shifted, N, log2pi_half)
        rising = acb(1)
        for i in range(m):
            rising *= w + i
        value = lg.exp() / rising
    with pctx.scoped():
        return +value


def gamma_oracle(a: Fraction | int, pctx: PrecisionContext) -> arb:
    a = Fraction(a)
    if a <= 0:
        raise ParameterError(f"gamma_oracle needs a > 0, got {a}")
    inner = pctx.guard(8)
    with inner.scoped():
        w = acb(rational_ball(a))
    value = gamma_ball(w, inner)
    with pctx.scoped():
        return +value.real


def gamma_deriv_oracle(a: Fraction | int, s: int, pctx: PrecisionContext) -> arb:
    """``Gamma^(s)(a)`` by Cauchy's formula on a circle of radius ``min(a/2, 1/2)``.

    On the disc of radius ``R = (r + a)/2`` every point has positive real
    part, and ``|Gamma(x+iy)| <= Gamma(x)`` with ``Gamma`` log-convex on
    ``(0, inf)``, so ``max(Gamma(a-R), Gamma(a+R))`` bounds ``|Gamma|`` there.
    """
    a = Fraction(a)
    if a <= 0:
        raise ParameterError(f"gamma_deriv_oracle needs a > 0, got {a}")
    if s < 0:
        raise ParameterError("derivative order must be >= 0")
    if s == 0:
        return gamma_oracle(a, pctx)
    r = min(a / 2, Fraction(1, 2))
    R = (r + a) / 2
    bound_ctx = PrecisionContext(64, 40)
    B = gamma_oracle(a - R, bound_ctx)
    B2 = gamma_oracle(a + R, bound_ctx)
    with pctx.scoped():
        B = (B if B > B2 else B2).upper() * 2
        pi = pi_oracle(pctx.guard(16))
        center = acb(rational_ball(a))
    value = cauchy_derivative(
        gamma_ball,
        center,
        s,
        r,
        R,
        B,
        pctx,
        real_symmetric=True,
        pi=pi,
    )
    with pctx.scoped():
        return +value.real


__all__ = [
    "OracleResult",
    "euler_gamma_oracle",
    "gamma_ball",
    "gamma_deriv_oracle",
    "gamma_oracle",
    "log_oracle",
    "pi_oracle",
]
