"""Derivatives of analytic functions from samples on a circle."""

from __future__ import annotations

import math
from typing import Callable

from flint import acb, arb

from .ball import ParameterError, PrecisionContext, add_error, to_acb, to_arb


def cauchy_derivative(
    f: Callable[[acb, PrecisionContext], acb],
    center,
    order: int,
    r,
    R,
    bound,
    pctx: PrecisionContext,
    real_symmetric: bool = False,
    pi: arb | None = None,
) -> acb:
    """Enclosure of ``f^(order)(center)`` by the trapezoid rule on ``|w - center| = r``.

    ``bound`` must majorize ``|f|`` on the closed disc of radius ``R > r``.  The
    aliasing error of the M-point rule is at most
    ``order! B R^-order q^M / (1 - q^M)`` with ``q = r/R``, which is added to
    the radius.  With ``real_symmetric`` (``f(conj w) = conj f(w)`` and a real
    center) only half the nodes are evaluated.
    """
    if order < 0:
        raise ParameterError("order must be >= 0")
    center = to_acb(center, pctx)
    with pctx.scoped():
        r, R, B = to_arb(r, pctx), to_arb(R, pctx), to_arb(bound, pctx).abs_upper()
        if not R > r:
            raise ParameterError("outer radius must exceed the sampling radius")
        q = r / R
        fac = arb.fac_ui(order)
        scale = fac * B / R**order
        # smallest M with scale * q^M / (1 - q^M) <= target / 4
        log2_q = float((q.log() / arb(2).log()).upper())
        need = float((scale.log() / arb(2).log()).upper()) + pctx.target_bits + 3
        M = max(order + 2, math.ceil(need / -log2_q) + 1)
        qM = q**M
        alias = (scale * qM / (1 - qM)).upper()
        if pi is None:
            pi = arb.pi()
    # node values need to be good to target * r^order / order!
    extra = order * max(0, math.ceil(-float(r.log().lower()) / math.log(2))) + int(
        math.log2(math.factorial(order)) + 4
    )
    inner = pctx.with_target(pctx.target_bits + extra).guard(extra)

    def node(j: int) -> tuple[acb, acb]:
        with inner.scoped():
            angle = 2 * pi * j / M
            w = acb(angle.cos(), angle.sin())
            z = center + r * w
        return f(z, inner), w

    with inner.scoped():
        total = acb(0)
    if real_symmetric:
        half = (M - 1) // 2
        for j in range(0, half + 1):
            value, w = node(j)
            with inner.scoped():
                term = value * w ** (-order) if order else value
                total += term if j == 0 else 2 * acb(term.real)
        if M % 2 == 0:
            value, w = node(M // 2)
            with inner.scoped():
                total += value * (-1) ** order
        with inner.scoped():
            total = acb(total.real)
    else:
        for j in range(M):
            value, w = node(j)
            with inner.scoped():
                total += value * w ** (-order) if order else value
    with pctx.scoped():
        est = total / M * fac / r**order
        return add_error(est, alias)


__all__ = ["cauchy_derivative"]
