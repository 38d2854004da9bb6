"""Error-controlled integrals over segments and half-lines.

Segments go through Arb's rigorous adaptive Gauss-Legendre integrator
(``acb.integral``); half-lines are cut at a point ``T`` chosen from an
explicit majorant of the integrand, and the discarded tail is folded into
the output radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from flint import acb, arb

from .ball import (
    PrecisionContext,
    PrecisionExhausted,
    add_error,
    rational_ball,
    to_acb,
    to_arb,
)

Kernel = Callable[[acb, bool], acb]


def quad_interval(kernel: Kernel, a, b, pctx: PrecisionContext, abs_tol: arb | None = None) -> acb:
    """Enclosure of ``int_a^b kernel``; ``kernel(x, analytic)`` follows Arb's convention."""
    with pctx.scoped():
        tol = pctx.target_radius / 8 if abs_tol is None else abs_tol
        value = acb.integral(
            kernel,
            to_acb(a),
            to_acb(b),
            abs_tol=tol,
            rel_tol=arb(2) ** (-pctx.work_bits),
            eval_limit=2_000_000,
        )
    if not value.is_finite():
        raise PrecisionExhausted(f"quadrature on [{a}, {b}] did not converge", best=value, bits=pctx.work_bits)
    return value


def quad_panels(kernel: Kernel, points: Sequence, pctx: PrecisionContext) -> acb:
    """Sum of panel integrals over consecutive breakpoints, in fixed order."""
    with pctx.scoped():
        tol = pctx.target_radius / (8 * max(1, len(points) - 1))
    total = acb(0)
    for lo, hi in zip(points, points[1:]):
        piece = quad_interval(kernel, lo, hi, pctx, abs_tol=tol)
        with pctx.scoped():
            total += piece
    return total


@dataclass(frozen=True)
class Majorant:
    """``|f(r)| <= A (1 + b r)^m (log(1 + b r) + L)^k exp(-c r)`` for real ``r >= 0``.

    All parameters are read as upper bounds except ``c`` (lower bound).
    ``L`` must be positive when ``k > 0``.
    """

    c: arb | Fraction | int
    A: arb | Fraction | int = 1
    m: Fraction | int = 0
    k: int = 0
    b: arb | Fraction | int = 1
    L: arb | Fraction | int = 4

    def _parts(self):
        c = to_arb(self.c).lower()
        if not c > 0:
            raise ValueError(f"majorant decay rate must be positive, got {self.c}")
        return (
            c,
            to_arb(self.A).abs_upper(),
            rational_ball(Fraction(self.m)),
            to_arb(self.b).abs_upper(),
            to_arb(self.L).lower(),
        )

    def threshold(self) -> arb:
        """Past this point ``P(r) exp(-c r / 2)`` is nonincreasing."""
        c, _, m, _, L = self._parts()
        slope = m + (self.k / L if self.k else 0)
        return (2 * slope / c).upper()

    def tail(self, T) -> arb:
        """Upper bound of ``int_T^inf`` of the majorant, valid for ``T >= threshold``."""
        c, A, m, b, L = self._parts()
        T = to_arb(T)
        base = 1 + b * T
        P = A * base**m
        if self.k:
            P *= (base.log() + L) ** self.k
        return (P * (-c * T).exp() * 2 / c).upper()

    def total(self) -> arb:
        """Upper bound of ``int_0^inf`` of the majorant.

        Uses ``log(1+br) <= b r`` and ``(1+br)^m <= (1+br)^ceil(m)`` to reduce to
        a polynomial times an exponential, integrated exactly term by term.
        """
        c, A, _, b, L = self._parts()
        M = max(0, math.ceil(Fraction(self.m)))
        # coefficients in r of (1 + b r)^M (b r + L)^k
        poly = [arb(0)] * (M + self.k + 1)
        for i in range(M + 1):
            for j in range(self.k + 1):
                coef = math.comb(M, i) * math.comb(self.k, j) * L ** (self.k - j)
                poly[i + j] += coef * b ** (i + j)
        total = arb(0)
        for d, p in enumerate(poly):
            total += p * arb.fac_ui(d) / c ** (d + 1)
        return (A * total).upper()


def truncation_point(majorant: Majorant, goal: arb, pctx: PrecisionContext) -> tuple[int, arb]:
    """Integer cut ``T`` with certified tail at most ``goal``."""
    with pctx.scoped():
        T = max(1, math.ceil(float(majorant.threshold())))
        tail = majorant.tail(T)
        while not tail <= goal:
            T = math.ceil(T * 1.25) + 1
            tail = majorant.tail(T)
        return T, tail


def _doubling_points(T: int) -> list[int]:
    points = [0, 1]
    while points[-1] < T:
        points.append(min(T, points[-1] * 2))
    return points


def quad_semiinfinite(kernel: Kernel, majorant: Majorant, pctx: PrecisionContext) -> acb:
    """Enclosure of ``int_0^inf kernel(r) dr`` along the real half-line.

    The cut point leaves a tail of at most ``target/8``; the finite part runs
    on doubling panels ``[0,1], [1,2], [2,4], ...``.
    """
    with pctx.scoped():
        goal = pctx.target_radius / 8
    T, tail = truncation_point(majorant, goal, pctx)
    value = quad_panels(kernel, _doubling_points(T), pctx)
    with pctx.scoped():
        return add_error(value, tail)


def fourier_tail(R, derivs: Sequence[acb], remainder: arb, pctx: PrecisionContext) -> acb:
    """``int_R^inf e^{ix} f(x) dx`` from repeated integration by parts.

    ``derivs[j]`` encloses ``f^(j)(R)`` and ``remainder`` bounds
    ``int_R^inf |f^(n)|`` with ``n = len(derivs)``.
    """
    with pctx.scoped():
        R = to_acb(R)
        phase = (acb(0, 1) * R).exp()
        total = acb(0)
        ipow = acb(0, 1)
        for d in derivs:
            total += ipow * d
            ipow *= acb(0, 1)
        return add_error(total * phase, remainder)


__all__ = [
    "Majorant",
    "fourier_tail",
    "quad_interval",
    "quad_panels",
    "quad_semiinfinite",
    "truncation_point",
]
