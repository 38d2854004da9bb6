"""Integer-relation search (PSLQ) over ball-valued constants.

A relation that PSLQ proposes is only reported after the integer
combination of the original balls is shown to contain zero.  A negative
answer uses the classical norm bound: after any PSLQ iteration, every
integer relation has Euclidean norm at least ``1 / max_j |H_jj|``.  Once
that exceeds ``sqrt(n) * H``, no relation with entries bounded by ``H``
can exist.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from flint import acb, arb

from . import borel, series
from .ball import ParameterError, PrecisionContext, radius, rational_ball, to_acb

FOUND = "found"
NONE_UP_TO_HEIGHT = "none_up_to_height"
INSUFFICIENT = "insufficient_precision"


@dataclass(frozen=True)
class ConstantVector:
    labels: tuple[str, ...]
    values: tuple[arb, ...]
    digits: int

    def __post_init__(self) -> None:
        if len(self.values) < 2 or len(self.values) != len(self.labels):
            raise ParameterError("need at least two labelled values")
        limit = arb(10) ** (-self.digits)
        for label, v in zip(self.labels, self.values):
            if not radius(v) <= limit:
                raise ParameterError(f"{label} has radius above 10^-{self.digits}")


@dataclass(frozen=True)
class ProbeResult:
    relation: tuple[int, ...] | None
    height_bound: int
    digits_used: int
    verdict: str
    labels: tuple[str, ...] = ()
    norm_bound: float = 0.0
    iterations: int = 0

    def to_wire(self) -> dict[str, object]:
        return {
            "labels": list(self.labels),
            "relation": None if self.relation is None else [str(m) for m in self.relation],
            "height_bound": str(self.height_bound),
            "digits_used": str(self.digits_used),
            "verdict": self.verdict,
            "norm_bound": f"{self.norm_bound:.6e}",
            "iterations": str(self.iterations),
        }


def required_digits(n: int, H: int) -> int:
    return 10 + n * math.ceil(math.log10(H)) if H > 1 else 10 + n


def _to_mpf(x: arb) -> mpmath.mpf:
    man, exp = x.mid().man_exp()
    return mpmath.ldexp(mpmath.mpf(int(man)), int(exp))


def _residual_contains_zero(values: tuple[arb, ...], m: tuple[int, ...], bits: int) -> bool:
    with PrecisionContext(bits).scoped():
        total = arb(0)
        for mi, v in zip(m, values):
            total += mi * v
        return 0 in total


def _trivial_relation(vec: ConstantVector) -> tuple[int, ...] | None:
    n = len(vec.values)
    for i, v in enumerate(vec.values):
        if 0 in v:
            return tuple(int(j == i) for j in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if vec.values[i].mid() == vec.values[j].mid() and vec.values[i].rad() == vec.values[j].rad():
                return tuple(1 if k == i else -1 if k == j else 0 for k in range(n))
    return None


def _normalize(m: list[int]) -> tuple[int, ...]:
    g = 0
    for x in m:
        g = math.gcd(g, x)
    m = [x // g for x in m] if g > 1 else m
    first = next((x for x in m if x), 0)
    return tuple(-x for x in m) if first < 0 else tuple(m)


def pslq(vec: ConstantVector, max_height: int, pctx: PrecisionContext | None = None, max_iter: int = 100_000) -> ProbeResult:
    """Search for ``m`` with ``sum m_i v_i = 0`` and ``max |m_i| <= max_height``."""
    n = len(vec.values)
    D = vec.digits
    base = dict(height_bound=max_height, digits_used=D, labels=vec.labels)
    if D < required_digits(n, max_height):
        return ProbeResult(None, verdict=INSUFFICIENT, **base)
    check_bits = 2 * (pctx.work_bits if pctx else int(D * 3.33) + 32)

    trivial = _trivial_relation(vec)
    if trivial is not None:
        return ProbeResult(trivial, verdict=FOUND, **base)

    sqrt_n_H = math.sqrt(n) * max_height
    with mpmath.workdps(D + 10):
        x = [_to_mpf(v) for v in vec.values]
        tol = mpmath.mpf(10) ** (-(D * 4 // 5))
        gamma = mpmath.sqrt(mpmath.mpf(4) / 3) + mpmath.mpf(10) ** -6
        # initialisation
        s = [mpmath.mpf(0)] * n
        acc = mpmath.mpf(0)
        for k in reversed(range(n)):
            acc += x[k] ** 2
            s[k] = mpmath.sqrt(acc)
        t = s[0]
        y = [xi / t for xi in x]
        s = [sk / t for sk in s]
        H = [[mpmath.mpf(0)] * (n - 1) for _ in range(n)]
        for i in range(n):
            for j in range(min(i + 1, n - 1)):
                if i == j:
                    H[i][j] = s[j + 1] / s[j]
                else:
                    H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1])
        A = [[int(i == j) for j in range(n)] for i in range(n)]
        B = [[int(i == j) for j in range(n)] for i in range(n)]

        def reduce_rows(rows, cols_of):
            for i in rows:
                for j in reversed(range(cols_of(i))):
                    if not H[j][j]:
                        continue
                    q = int(mpmath.nint(H[i][j] / H[j][j]))
                    if q == 0:
                        continue
                    y[j] += q * y[i]
                    for k in range(j + 1):
                        H[i][k] -= q * H[j][k]
                    for k in range(n):
                        A[i][k] -= q * A[j][k]
                        B[k][j] += q * B[k][i]

        reduce_rows(range(1, n), lambda i: i)
        bound = 0.0
        for it in range(1, max_iter + 1):
            # exchange step
            m = max(range(n - 1), key=lambda i: gamma ** (i + 1) * abs(H[i][i]))
            y[m], y[m + 1] = y[m + 1], y[m]
            A[m], A[m + 1] = A[m + 1], A[m]
            H[m], H[m + 1] = H[m + 1], H[m]
            for row in B:
                row[m], row[m + 1] = row[m + 1], row[m]
            if m < n - 2:
                t0 = mpmath.sqrt(H[m][m] ** 2 + H[m][m + 1] ** 2)
                t1, t2 = H[m][m] / t0, H[m][m + 1] / t0
                for i in range(m, n):
                    t3, t4 = H[i][m], H[i][m + 1]
                    H[i][m] = t1 * t3 + t2 * t4
                    H[i][m + 1] = -t2 * t3 + t1 * t4
            reduce_rows(range(m + 1, n), lambda i: min(i, m + 2))

            # relation candidate: a tiny y_j means column j of B annihilates x
            j_min = min(range(n), key=lambda j: abs(y[j]))
            if abs(y[j_min]) < tol:
                cand = _normalize([B[k][j_min] for k in range(n)])
                if max(abs(c) for c in cand) <= max_height and _residual_contains_zero(vec.values, cand, check_bits):
                    return ProbeResult(cand, verdict=FOUND, norm_bound=bound, iterations=it, **base)
                return ProbeResult(None, verdict=INSUFFICIENT, norm_bound=bound, iterations=it, **base)

            big = max(abs(H[j][j]) for j in range(n - 1))
            bound = float(1 / big) if big else float("inf")
            if bound > sqrt_n_H:
                return ProbeResult(None, verdict=NONE_UP_TO_HEIGHT, norm_bound=bound, iterations=it, **base)
            # entries of A outgrowing the working precision make further steps meaningless
            if max(abs(a) for row in A for a in row) > mpmath.mpf(10) ** (D // 2 + 5):
                break
    return ProbeResult(None, verdict=INSUFFICIENT, norm_bound=bound, iterations=max_iter, **base)


# ---------------------------------------------------------------------------
# probes


def _bits_for(digits: int) -> int:
    return int(math.ceil(digits * math.log2(10))) + 48


def _real(z: acb, label: str) -> arb:
    if not 0 in z.imag:
        raise ParameterError(f"{label} is not real")
    return z.real


def probe_conjecture3(a: Fraction | int, s: int, digits: int, H: int, pctx: PrecisionContext | None = None) -> ProbeResult:
    """Relations among ``1, e, e E_{a,s+1}(-1)``."""
    a = Fraction(a)
    if a.denominator == 1 and a <= 0:
        raise ParameterError("a must avoid the nonpositive integers")
    pctx = pctx or PrecisionContext(_bits_for(digits))
    e_val = series.eval_E(series.EFunctionSpec.eas(a, s + 1), -1, pctx)
    with pctx.scoped():
        e = arb(1).exp()
        third = _real(to_acb(e) * e_val, "e E(-1)")
    vec = ConstantVector(("1", "e", f"e*E[{a},{s + 1}](-1)"), (arb(1), e, third), digits)
    return pslq(vec, H, pctx)


def probe_mixed_independence(
    alpha: Fraction | int, rho: Fraction | int, digits: int, H: int, pctx: PrecisionContext | None = None
) -> ProbeResult:
    """Relations among ``1, e^rho, int_0^inf e^{-t}/(1 + alpha t) dt``."""
    alpha, rho = Fraction(alpha), Fraction(rho)
    if alpha <= 0:
        raise ParameterError("alpha must be positive")
    if rho == 0:
        raise ParameterError("rho must be nonzero")
    pctx = pctx or PrecisionContext(_bits_for(digits))
    # (1/alpha) int e^{-x/alpha}/(1+x) dx = int e^{-t}/(1+alpha t) dt
    phi = borel.laplace_sum(borel.AntiESpec(0, 0), alpha, 0.0, pctx)
    with pctx.scoped():
        e_rho = rational_ball(rho).exp()
        third = _real(phi, "phi")
    vec = ConstantVector(("1", f"e^{rho}", f"int e^-t/(1+{alpha}t)"), (arb(1), e_rho, third), digits)
    return pslq(vec, H, pctx)


__all__ = [
    "FOUND",
    "INSUFFICIENT",
    "NONE_UP_TO_HEIGHT",
    "ConstantVector",
    "ProbeResult",
    "probe_conjecture3",
    "probe_mixed_independence",
    "pslq",
    "required_digits",
]
