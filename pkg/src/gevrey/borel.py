"""Borel-Laplace 1-summation of the power-log family of divergent series.

The divergent series ``sum n! u_{a,k,n} z^n`` has Borel transform
``K(x) = (1+x)^(a-1) log(1+x)^k``.  Its sum in direction ``theta`` is

    phi_theta(z) = (1/z) int_0^{inf e^{i theta}} K(x) exp(-x/z) dx,

defined when ``|theta - arg z| < pi/2`` and ``theta`` avoids the singular
direction ``pi`` of ``K``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from flint import acb, arb

from .ball import (
    DomainError,
    ParameterError,
    PrecisionContext,
    add_error,
    contains_zero,
    rational_ball,
    to_acb,
)
from .cauchy import cauchy_derivative
from .quadrature import Majorant, quad_semiinfinite
from .series import CoeffStream, EFunctionSpec, coeff_powerlog, eval_E

# directions closer than this to a singular direction are refused
ANTI_STOKES_TOL = math.pi / 128
# offset the CLI suggests when a requested direction is refused
ANTI_STOKES_SHIFT = math.pi / 64


class DirectionError(DomainError):
    """The summation direction is anti-Stokes or outside the sector of ``z``."""

    def __init__(self, message: str, suggested: float | None = None):
        super().__init__(message)
        self.suggested = suggested


@dataclass(frozen=True)
class Direction:
    theta: float = 0.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise ParameterError("direction must be finite")

    @property
    def normalized(self) -> float:
        """Representative in ``(-pi, pi]``."""
        t = math.remainder(self.theta, 2 * math.pi)
        return math.pi if t == -math.pi else t

    def distance(self, other: "Direction") -> float:
        return abs(math.remainder(self.theta - other.theta, 2 * math.pi))


@dataclass(frozen=True)
class AntiESpec:
    """Divergent series with Borel kernel ``(1+x)^(a-1) log(1+x)^k``."""

    a: Fraction
    k: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        if self.k < 0:
            raise ParameterError(f"k must be >= 0, got {self.k}")

    @classmethod
    def binomial(cls, s: Fraction | int) -> "AntiESpec":
        """``sum s(s-1)...(s-n+1) z^n``, whose Borel kernel is ``(1+x)^s``."""
        return cls(Fraction(s) + 1, 0)

    @property
    def is_polynomial(self) -> bool:
        return self.k == 0 and self.a.denominator == 1 and self.a >= 1

    @property
    def singularities(self) -> tuple[complex, ...]:
        return () if self.is_polynomial else (-1 + 0j,)

    def coeff(self, n: int) -> Fraction:
        """Coefficient ``n! u_{a,k,n}`` of the divergent series."""
        return math.factorial(n) * coeff_powerlog(self.a, self.k, n)

    def kernel_coeff(self, n: int) -> Fraction:
        return coeff_powerlog(self.a, self.k, n)


def anti_stokes(spec: AntiESpec) -> set[Direction]:
    return {Direction(math.atan2(s.imag, s.real)) for s in spec.singularities}


def is_anti_stokes(spec: AntiESpec, theta: float, tol: float = ANTI_STOKES_TOL) -> bool:
    d = Direction(theta)
    return any(d.distance(bad) < tol for bad in anti_stokes(spec))


def _check_direction(spec: AntiESpec, theta: float) -> None:
    if is_anti_stokes(spec, theta):
        raise DirectionError(
            f"theta={theta} is within pi/128 of an anti-Stokes direction of "
            f"(a={spec.a}, k={spec.k}); suggested --theta {theta + ANTI_STOKES_SHIFT!r}",
            suggested=theta + ANTI_STOKES_SHIFT,
        )


def _unit(theta: float) -> acb:
    if theta == 0:
        return acb(1)
    t = arb(theta)
    return acb(t.cos(), t.sin())


def _ray_geometry(theta: float) -> tuple[arb, arb]:
    """Lower bound of ``|1 + r e^{i theta}|`` over ``r >= 0``, and its log penalty."""
    t = arb(theta)
    if t.cos() >= 0:
        return arb(1), arb(0)
    delta = t.sin().abs_lower()
    if not delta > 0:
        raise DirectionError(f"ray at theta={theta} passes through the singularity -1")
    delta = delta if delta < 1 else arb(1)
    return delta, -delta.log()


def _polynomial_sum(spec: AntiESpec, z: acb) -> acb:
    n_terms = int(spec.a)
    acc = acb(0)
    for n in reversed(range(n_terms)):
        acc = acc * z + rational_ball(spec.coeff(n))
    return acc


def _kernel_factory(spec: AntiESpec, rot: acb, w: acb):
    """Integrand ``w K(r e^{i theta}) exp(-r w)`` in the real variable ``r``."""
    m = spec.a - 1
    k = spec.k
    integer_power = m.denominator == 1
    m_ball = rational_ball(m)

    def kernel(r: acb, analytic: bool) -> acb:
        u = 1 + r * rot
        if integer_power:
            val = u ** int(m) if m else acb(1)
        elif m.denominator == 2:
            val = u.sqrt(analytic=analytic) ** m.numerator
        else:
            val = u.pow(m_ball, analytic=analytic)
        if k:
            val *= u.log(analytic=analytic) ** k
        return w * val * (-r * w).exp()

    return kernel


def _majorant(spec: AntiESpec, theta: float, w: acb) -> Majorant:
    delta, penalty = _ray_geometry(theta)
    m = spec.a - 1
    A = w.abs_upper()
    if m < 0:
        A *= delta ** rational_ball(m)
    return Majorant(
        c=w.real.lower(),
        A=A,
        m=max(m, Fraction(0)),
        k=spec.k,
        b=1,
        L=arb.pi() + penalty,
    )


def laplace_sum(spec: AntiESpec, z, theta: float, pctx: PrecisionContext) -> acb:
    """Enclosure of the 1-sum ``phi_{a,k+1;theta}(z)``."""
    z = to_acb(z, pctx)
    if contains_zero(z):
        raise DomainError("1-summation is evaluated at z != 0")
    if spec.is_polynomial:
        with pctx.scoped():
            return _polynomial_sum(spec, z)
    _check_direction(spec, theta)
    with pctx.scoped():
        rot = _unit(theta)
        w = rot / z
        if not w.real > 0:
            raise DirectionError(
                f"z={z} is outside the half-plane |arg z - theta| < pi/2 for theta={theta}"
            )
        kernel = _kernel_factory(spec, rot, w)
        majorant = _majorant(spec, theta, w)
    return quad_semiinfinite(kernel, majorant, pctx)


def laplace_sum_sup(spec: AntiESpec, center, R, theta: float, pctx: PrecisionContext) -> arb:
    """Upper bound of ``|phi_theta|`` on the disc ``|w - center| <= R``.

    ``1/w`` maps the disc (when it avoids 0) onto the disc with centre
    ``conj(center)/(|center|^2 - R^2)`` and radius ``R/(|center|^2 - R^2)``.
    """
    center = to_acb(center, pctx)
    with pctx.scoped():
        R = rational_ball(R) if isinstance(R, (int, Fraction)) else R
        if spec.is_polynomial:
            reach = center.abs_upper() + R
            return sum(
                (abs(rational_ball(spec.coeff(n))) * reach**n for n in range(int(spec.a))),
                arb(0),
            ).upper()
        denom = center.abs_lower() ** 2 - R**2
        if not denom > 0:
            raise DomainError("disc contains 0")
        rot = _unit(theta)
        image_center = rot * center.conjugate() / denom
        image_radius = R / denom
        c = image_center.real - image_radius
        if not c > 0:
            raise DirectionError("disc leaves the summation half-plane")
        w = acb(arb(0, image_radius.upper()), arb(0, image_radius.upper())) + image_center
        bound = _majorant(spec, theta, w)
        return Majorant(c=c.lower(), A=bound.A, m=bound.m, k=bound.k, b=bound.b, L=bound.L).total()


def laplace_sum_derivative(
    spec: AntiESpec, z, theta: float, pctx: PrecisionContext, order: int = 1
) -> acb:
    """Derivative of the 1-sum by a Cauchy integral on a radius ``min(|z|/4, 1/4)`` circle."""
    z = to_acb(z, pctx)
    with pctx.scoped():
        zabs = z.abs_lower()
        r = min(Fraction(1, 4), Fraction(float(zabs.lower())) / 4)
        cos_gap = (_unit(theta) * z.conjugate() / z.abs_upper()).real.lower()
        if not cos_gap > 0:
            raise DirectionError("z is outside the summation half-plane")
        room = Fraction(float((3 * zabs * cos_gap / 4).lower()))
        R = min(4 * r, room)
        if R <= r:
            raise DomainError("no room for a Cauchy circle inside the summation sector")
        bound = laplace_sum_sup(spec, z, R, theta, pctx)
    real_symmetric = theta == 0 and z.imag.is_zero()
    return cauchy_derivative(
        lambda w, p: laplace_sum(spec, w, theta, p),
        z,
        order,
        r,
        R,
        bound,
        pctx,
        real_symmetric=real_symmetric,
    )


# ---------------------------------------------------------------------------
# asymptotics


@dataclass(frozen=True)
class AsymptoticsCheck:
    error: arb
    first_omitted: arb
    passed: bool


def gevrey_asymptotics_check(
    spec: AntiESpec, z: Fraction | int, N: int, pctx: PrecisionContext
) -> AsymptoticsCheck:
    """Compare ``phi_0(1/z)`` with its truncated divergent series ``sum_{n<N} n! u_n z^-n``.

    Passes when the truncation error is at most twice the first omitted term.
    A vanishing first omitted term (terminating series) passes iff the error
    ball contains zero.
    """
    z = Fraction(z)
    if z <= 0:
        raise ParameterError("asymptotics are checked on the positive real axis")
    if N < 1:
        raise ParameterError("N must be >= 1")
    value = laplace_sum(spec, 1 / z, 0.0, pctx)
    partial = sum((spec.coeff(n) / z**n for n in range(N)), Fraction(0))
    omitted = abs(spec.coeff(N) / z**N)
    with pctx.scoped():
        error = value.real - rational_ball(partial)
        err_abs = abs(error)
        first = rational_ball(omitted)
        if omitted == 0:
            passed = 0 in error
        else:
            passed = bool(err_abs.upper() <= 2 * first.lower())
    return AsymptoticsCheck(err_abs, first, passed)


# ---------------------------------------------------------------------------
# mixed functions


@dataclass(frozen=True, eq=False)
class MixedFunctionSpec:
    """``F(z) + prefactor * exp(exp_rate z) * phi(1/z) + constant``.

    ``exp_rate = 0`` gives a mixed function in the strict sense; a nonzero
    rate covers the ``e^{-z} phi(1/z)`` products that appear in the
    Euler-constant relation.
    """

    e_part: EFunctionSpec | None = None
    antie_part: AntiESpec | None = None
    prefactor: Fraction = Fraction(1)
    constant: Fraction = Fraction(0)
    exp_rate: Fraction = Fraction(0)


def eval_mixed(spec: MixedFunctionSpec, z, theta: float, pctx: PrecisionContext) -> acb:
    z = to_acb(z, pctx)
    if contains_zero(z):
        raise DomainError("mixed functions are evaluated at z != 0")
    total = acb(0)
    if spec.e_part is not None:
        total = eval_E(spec.e_part, z, pctx)
    if spec.antie_part is not None and spec.prefactor:
        with pctx.scoped():
            inv = 1 / z
        phi = laplace_sum(spec.antie_part, inv, theta, pctx)
        with pctx.scoped():
            term = rational_ball(spec.prefactor) * phi
            if spec.exp_rate:
                term *= (rational_ball(spec.exp_rate) * z).exp()
            total += term
    with pctx.scoped():
        return total + rational_ball(spec.constant)


# ---------------------------------------------------------------------------
# G-values as Laplace transforms of E-functions


def _check_duality(g: CoeffStream, z: acb, pctx: PrecisionContext) -> None:
    if g.rho > Fraction(1, 2):
        raise DomainError(f"G-function radius 1/rho = {1 / g.rho if g.rho else 'inf'} is below 2")
    with pctx.scoped():
        if not z.real > rational_ball(Fraction(1, 2)):
            raise DomainError("the Laplace duality needs Re z > 1/2")


def g_series_side(g: CoeffStream, z, pctx: PrecisionContext) -> acb:
    """``(1/z) G(1/z)`` summed from the G-function coefficients ``|a_n| <= C rho^n``."""
    z = to_acb(z, pctx)
    _check_duality(g, z, pctx)
    with pctx.scoped():
        inv = 1 / z
        x = rational_ball(g.rho) * inv.abs_upper()
        if not x < 1:
            raise DomainError("G does not converge at 1/z")
        target = pctx.target_radius / 4
        N = 1
        while True:
            tail = (rational_ball(g.C) * x**N / (1 - x) * inv.abs_upper()).upper()
            if tail <= target:
                break
            N += 1
        acc = acb(0)
        for n in reversed(range(N)):
            acc = acc * inv + rational_ball(g(n))
        return add_error(acc * inv, tail)


def laplace_transform_E(g: CoeffStream, z, pctx: PrecisionContext) -> acb:
    """``int_0^inf e^{-xz} F(x) dx`` by quadrature, ``F = sum a_n x^n / n!``."""
    z = to_acb(z, pctx)
    _check_duality(g, z, pctx)
    F = EFunctionSpec.generic(
        CoeffStream(lambda n: g(n) / math.factorial(n), g.C, g.rho, name=f"Borel({g.name})")
    )

    def kernel(x: acb, analytic: bool) -> acb:
        return (-x * z).exp() * eval_E(F, x, pctx)

    with pctx.scoped():
        majorant = Majorant(c=z.real.lower() - rational_ball(g.rho), A=rational_ball(g.C))
    return quad_semiinfinite(kernel, majorant, pctx)


def laplace_of_E(g: CoeffStream, z, pctx: PrecisionContext) -> tuple[acb, acb]:
    """Both sides of the duality ``(1/z) G(1/z) = int_0^inf e^{-xz} F(x) dx``.

    Radius of convergence of ``G`` at least 2 (``rho <= 1/2``) and
    ``Re z > 1/2`` keep both sides absolutely convergent.
    """
    return g_series_side(g, z, pctx), laplace_transform_E(g, z, pctx)


__all__ = [
    "ANTI_STOKES_SHIFT",
    "ANTI_STOKES_TOL",
    "AntiESpec",
    "AsymptoticsCheck",
    "Direction",
    "DirectionError",
    "MixedFunctionSpec",
    "anti_stokes",
    "eval_mixed",
    "g_series_side",
    "gevrey_asymptotics_check",
    "is_anti_stokes",
    "laplace_of_E",
    "laplace_transform_E",
    "laplace_sum",
    "laplace_sum_derivative",
    "laplace_sum_sup",
]
