"""Registry of identities, each checked by two independent evaluation plans.

Every case expands into instances over a parameter grid.  An instance pairs
a left plan and a right plan (plus optional cross-check plans); each plan is
a picklable ``functools.partial`` over a module-level function so instances
can be shipped to worker processes.  Plans reach the numerical layers through
module attributes (``borel.laplace_sum`` and so on) rather than imported
names, which lets tests instrument which layers a plan touches.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable, Sequence

from flint import acb, arb

from . import borel, oracles, quadrature, series
from .ball import (
    GevreyError,
    PrecisionContext,
    add_error,
    balls_intersect,
    exact_decimal,
    max_bits_from_env,
    radius,
    rational_ball,
    to_acb,
)

Plan = Callable[[PrecisionContext], acb]

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class Tolerance:
    """Either an absolute bound on the combined radius or pure intersection.

    ``absolute=None`` means the default ``2^-(bits - 56)`` taken from the
    starting precision of a run.
    """

    absolute: Fraction | None = None
    mode: str = "absolute"

    def bound(self, bits: int) -> arb:
        if self.mode == "intersection":
            return arb("inf")
        if self.absolute is None:
            return arb(2) ** (-(bits - 56))
        return rational_ball(self.absolute)


@dataclass(frozen=True)
class CaseInstance:
    id: str
    index: int
    params: tuple[tuple[str, object], ...]
    lhs: Plan
    rhs: Plan
    tolerance: Tolerance
    cross: tuple[tuple[str, Plan], ...] = ()

    @property
    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.id}[{inner}]" if inner else self.id


@dataclass(frozen=True)
class IdentityCase:
    id: str
    description: str
    lhs_plan: Callable[..., acb]
    rhs_plan: Callable[..., acb]
    grid: tuple[tuple[tuple[str, object], ...], ...] = ((),)
    tolerance: Tolerance = Tolerance()
    cross_plans: tuple[tuple[str, Callable[..., acb]], ...] = ()
    # per-instance overrides keyed by grid index
    overrides: tuple[tuple[int, Tolerance], ...] = ()

    @property
    def parameters(self) -> tuple[tuple[tuple[str, object], ...], ...]:
        return self.grid

    def expand(self) -> list[CaseInstance]:
        out = []
        special = dict(self.overrides)
        for i, params in enumerate(self.grid):
            kw = dict(params)
            out.append(
                CaseInstance(
                    id=self.id,
                    index=i,
                    params=params,
                    lhs=partial(self.lhs_plan, **kw),
                    rhs=partial(self.rhs_plan, **kw),
                    tolerance=special.get(i, self.tolerance),
                    cross=tuple((name, partial(fn, **kw)) for name, fn in self.cross_plans),
                )
            )
        return out


@dataclass
class VerificationReport:
    id: str
    params: tuple[tuple[str, object], ...]
    lhs: acb | None
    rhs: acb | None
    gap: arb | None
    status: str
    bits: int
    seconds: float
    cause: str = ""
    cross: dict[str, acb] = field(default_factory=dict)

    @property
    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.id}[{inner}]" if inner else self.id

    def to_wire(self) -> dict[str, object]:
        """JSON-ready mapping with every number as an exact decimal string."""
        return {
            "id": self.id,
            "params": {k: str(v) for k, v in self.params},
            "lhs_mid": _complex_decimal(self.lhs),
            "lhs_rad": _rad_decimal(self.lhs),
            "rhs_mid": _complex_decimal(self.rhs),
            "rhs_rad": _rad_decimal(self.rhs),
            "gap": "" if self.gap is None else exact_decimal(self.gap),
            "status": self.status,
            "bits": str(self.bits),
            "seconds": f"{self.seconds:.3f}",
        }


def _complex_decimal(z: acb | None) -> str:
    if z is None:
        return ""
    re = exact_decimal(z.real.mid())
    if z.imag.mid() == 0:
        return re
    im = exact_decimal(z.imag.mid())
    return f"{re}{'' if im.startswith('-') else '+'}{im}i"


def _rad_decimal(z: acb | None) -> str:
    return "" if z is None else exact_decimal(radius(z))


# ---------------------------------------------------------------------------
# plans
#
# Every plan takes its parameters as keywords and ``pctx`` positionally last
# via ``partial``; parameters are plain ints, Fractions or strings.


def gamma_deriv_lhs(pctx: PrecisionContext, *, a: Fraction, s: int) -> acb:
    e = series.eval_E(series.EFunctionSpec.eas(a, s + 1), -1, pctx)
    phi = borel.laplace_sum(borel.AntiESpec(a, s), 1, 0.0, pctx)
    with pctx.scoped():
        return (-1) ** s * math.factorial(s) * e + acb(-1).exp() * phi


def gamma_deriv_rhs(pctx: PrecisionContext, *, a: Fraction, s: int) -> acb:
    return acb(oracles.gamma_deriv_oracle(a, s, pctx))


def _euler_mixed() -> borel.MixedFunctionSpec:
    # z E_{1,2}(-z) - e^{-z} phi(1/z), phi with Borel kernel log(1+x)
    return borel.MixedFunctionSpec(
        e_part=series.z_times_eas_minus(1, 2),
        antie_part=borel.AntiESpec(1, 1),
        prefactor=Fraction(-1),
        exp_rate=Fraction(-1),
    )


def euler_constancy_lhs(pctx: PrecisionContext, *, z: Fraction) -> acb:
    value = borel.eval_mixed(_euler_mixed(), z, 0.0, pctx)
    with pctx.scoped():
        return value - to_acb(z).log()


def euler_oracle_side(pctx: PrecisionContext, **_: object) -> acb:
    return acb(oracles.euler_gamma_oracle(pctx))


def euler_at_one_lhs(pctx: PrecisionContext) -> acb:
    e = series.eval_E(series.EFunctionSpec.eas(1, 2), -1, pctx)
    phi = borel.laplace_sum(borel.AntiESpec(1, 1), 1, 0.0, pctx)
    with pctx.scoped():
        return e - acb(-1).exp() * phi


def log2_lhs(pctx: PrecisionContext, *, z: Fraction) -> acb:
    spec = _euler_mixed()
    at_2z = borel.eval_mixed(spec, 2 * Fraction(z), 0.0, pctx)
    at_z = borel.eval_mixed(spec, z, 0.0, pctx)
    with pctx.scoped():
        return at_2z - at_z


def log2_rhs(pctx: PrecisionContext, *, z: Fraction) -> acb:
    return acb(oracles.log_oracle(2, pctx))


def _arctan_kernel(u: acb, analytic: bool) -> acb:
    return 1 / (1 + u * u)


def _sinc_kernel(x: acb, analytic: bool) -> acb:
    return x.sinc()


def _ibp_terms(R: int, pctx: PrecisionContext, deriv: Callable[[int], acb], bound: Callable[[int], arb]):
    """Derivative list for ``fourier_tail`` with the shortest remainder under target."""
    goal = pctx.target_radius / 8
    with pctx.scoped():
        n, best = 1, None
        while n <= 4 * R:
            rem = bound(n)
            if rem <= goal:
                best = n
                break
            n += 1
        if best is None:
            # past the optimal order the remainder grows; settle for the minimum
            best = min(range(1, 4 * R + 1), key=lambda j: float(bound(j).upper()))
        derivs = [deriv(j) for j in range(best)]
        return derivs, bound(best).upper()


def dirichlet_lhs(pctx: PrecisionContext, *, method: str) -> acb:
    if method == "dual":
        # int_0^inf dt/(1+t^2) folded onto [0,1] by t -> 1/t
        value = quadrature.quad_interval(_arctan_kernel, 0, 1, pctx)
        with pctx.scoped():
            return 2 * value
    R = 200
    head = quadrature.quad_panels(_sinc_kernel, list(range(0, R + 1, 4)), pctx)

    def deriv(j: int) -> acb:
        return acb((-1) ** j * arb.fac_ui(j) / arb(R) ** (j + 1))

    def bound(n: int) -> arb:
        return arb.fac_ui(n - 1) / arb(R) ** n

    derivs, rem = _ibp_terms(R, pctx, deriv, bound)
    tail = quadrature.fourier_tail(R, derivs, rem, pctx)
    with pctx.scoped():
        return head + acb(tail.imag)


def half_pi(pctx: PrecisionContext, **_: object) -> acb:
    pi = oracles.pi_oracle(pctx)
    with pctx.scoped():
        return acb(pi / 2)


def bessel_laplace_lhs(pctx: PrecisionContext) -> acb:
    spec = series.EFunctionSpec.bessel_i0()

    def kernel(x: acb, analytic: bool) -> acb:
        return series.eval_E(spec, x, pctx) * (-3 * x).exp()

    # |I0(x)| <= e^x on the half-line
    return quadrature.quad_semiinfinite(kernel, quadrature.Majorant(c=2), pctx)


def bessel_laplace_rhs(pctx: PrecisionContext) -> acb:
    inner = pctx.guard(16)
    gammas = [oracles.gamma_oracle(Fraction(k, 24), inner) for k in (1, 5, 7, 11)]
    pi = oracles.pi_oracle(inner)
    with inner.scoped():
        value = arb(6).sqrt() / (96 * pi**3)
        for g in gammas:
            value *= g
    with pctx.scoped():
        return acb(+value)


def inverse_sqrt8(pctx: PrecisionContext) -> acb:
    with pctx.scoped():
        return acb(1 / arb(8).sqrt())


def gompertz_summed(pctx: PrecisionContext) -> acb:
    return borel.laplace_sum(borel.AntiESpec(1, 1), 1, 0.0, pctx)


def _gompertz_kernel(t: acb, analytic: bool) -> acb:
    return (-t).exp() / (1 + t)


def gompertz_direct(pctx: PrecisionContext) -> acb:
    return quadrature.quad_semiinfinite(_gompertz_kernel, quadrature.Majorant(c=1), pctx)


def binomial_ode_residual(pctx: PrecisionContext, *, s: Fraction, z) -> acb:
    spec = borel.AntiESpec.binomial(s)
    zb = _point(z, pctx)
    f = borel.laplace_sum(spec, zb, 0.0, pctx)
    d = borel.laplace_sum_derivative(spec, zb, 0.0, pctx)
    with pctx.scoped():
        zz = to_acb(zb)
        return zz * zz * d + (1 - rational_ball(s) * zz) * f - 1


def zero(pctx: PrecisionContext, **_: object) -> acb:
    return acb(0)


def _point(z, pctx: PrecisionContext) -> acb | Fraction:
    """Grid points are Fractions or strings ``"p+qi"`` with rational parts."""
    if isinstance(z, str):
        re, im = z.rstrip("i").split("+")
        with pctx.scoped():
            return acb(rational_ball(Fraction(re)), rational_ball(Fraction(im)))
    return Fraction(z)


def _euler_head_coeff(m: int) -> Fraction:
    # (1 - (1+x) e^{-x}) / x = sum_m (-1)^(m+1) m x^m / (m+1)!
    return Fraction((-1) ** (m + 1) * m, math.factorial(m + 1))


def euler_integral_lhs(pctx: PrecisionContext) -> acb:
    head_spec = series.EFunctionSpec.generic(series.CoeffStream(_euler_head_coeff, 1, 1, name="euler-head"))

    def near(x: acb, analytic: bool) -> acb:
        return series.eval_E(head_spec, x, pctx) / (1 + x)

    def far(x: acb, analytic: bool) -> acb:
        return (1 - (1 + x) * (-x).exp()) / (x * (1 + x))

    with pctx.scoped():
        T = max(8, math.ceil((pctx.target_bits + 8) * math.log(2)))
    head = quadrature.quad_interval(near, 0, 1, pctx)
    points = [1]
    while points[-1] < T:
        points.append(min(T, 2 * points[-1]))
    body = quadrature.quad_panels(far, points, pctx)
    with pctx.scoped():
        # int_T^inf = log(1 + 1/T) - E1(T), 0 <= E1(T) <= e^{-T}/T
        e1_max = (-arb(T)).exp() / T
        tail = (1 + arb(1) / T).log() - e1_max / 2
        tail = add_error(tail, e1_max / 2)
        return head + body + tail


def cosine_lhs(pctx: PrecisionContext) -> acb:
    # panels of width 2 pi up to R = 64 pi, then integration by parts
    with pctx.scoped():
        pi = arb.pi()
        R = 64 * pi
        points = [2 * pi * j for j in range(33)]
    head = quadrature.quad_panels(lambda x, analytic: x.cos() / (1 + x * x), points, pctx)
    Rc = acb(R)
    i = acb(0, 1)

    def deriv(j: int) -> acb:
        # f = (1/(2i)) ((x - i)^-1 - (x + i)^-1)
        return (-1) ** j * arb.fac_ui(j) * ((Rc - i) ** (-j - 1) - (Rc + i) ** (-j - 1)) / (2 * i)

    def bound(n: int) -> arb:
        return arb.fac_ui(n - 1) / R**n

    derivs, rem = _ibp_terms(201, pctx, deriv, bound)
    tail = quadrature.fourier_tail(R, derivs, rem, pctx)
    with pctx.scoped():
        return head + acb(tail.real)


def cosine_rhs(pctx: PrecisionContext) -> acb:
    pi = oracles.pi_oracle(pctx)
    with pctx.scoped():
        return acb(pi / (2 * arb(1).exp()))


def _g_stream(g: str) -> series.CoeffStream:
    if g == "geometric":  # 1/(1 - x/2)
        return series.CoeffStream(lambda n: Fraction(1, 2**n), 1, Fraction(1, 2), name=g)
    if g == "identity":  # x; a_1 = 1 <= C/2 forces C = 2
        return series.CoeffStream(lambda n: Fraction(int(n == 1)), 2, Fraction(1, 2), name=g)
    if g == "log":  # -log(1 - x/2)
        return series.CoeffStream(
            lambda n: Fraction(0) if n == 0 else Fraction(1, n * 2**n), 1, Fraction(1, 2), name=g
        )
    raise ValueError(f"unknown G example {g!r}")


def duality_lhs(pctx: PrecisionContext, *, g: str, z: Fraction) -> acb:
    return borel.g_series_side(_g_stream(g), z, pctx)


def duality_rhs(pctx: PrecisionContext, *, g: str, z: Fraction) -> acb:
    return borel.laplace_transform_E(_g_stream(g), z, pctx)


def psi_one_lhs(pctx: PrecisionContext, *, z: Fraction) -> acb:
    return series.psi(1, 1, z, pctx)


def psi_one_rhs(pctx: PrecisionContext, *, z: Fraction) -> acb:
    with pctx.scoped():
        zz = to_acb(z)
        return (zz.exp() - 1) / zz


# ---------------------------------------------------------------------------
# catalog

F = Fraction
GAMMA_GRID_A = (F(1, 3), F(1, 2), F(2, 3), F(1), F(3, 2), F(2), F(5, 2))
BINOMIAL_S = (F(1, 2), F(-1, 3), F(3, 2))
BINOMIAL_Z = (F(1, 2), F(1), "2+1i")


def catalog() -> list[IdentityCase]:
    return [
        IdentityCase(
            "I1",
            "Gamma^(s)(a) = (-1)^s s! E_{a,s+1}(-1) + e^{-1} phi_{a,s}(1)",
            gamma_deriv_lhs,
            gamma_deriv_rhs,
            grid=tuple((("a", a), ("s", s)) for a in GAMMA_GRID_A for s in (0, 1, 2)),
        ),
        IdentityCase(
            "I2",
            "z E_{1,2}(-z) - e^{-z} phi(1/z) - log z is the constant gamma",
            euler_constancy_lhs,
            euler_oracle_side,
            grid=tuple((("z", F(z)),) for z in (1, 2, 5)),
        ),
        IdentityCase(
            "I3",
            "gamma = E_{1,2}(-1) - e^{-1} phi(1)",
            euler_at_one_lhs,
            euler_oracle_side,
        ),
        IdentityCase(
            "I4",
            "log 2 from the Euler-constant relation at 2z minus at z",
            log2_lhs,
            log2_rhs,
            grid=((("z", F(1)),),),
        ),
        IdentityCase(
            "I5",
            "int_0^inf sin(x)/x dx = pi/2",
            dirichlet_lhs,
            half_pi,
            grid=((("method", "dual"),), (("method", "direct"),)),
            overrides=((1, Tolerance(F(1, 10**10))),),
        ),
        IdentityCase(
            "I6",
            "int_0^inf J0(ix) e^{-3x} dx = sqrt(6)/(96 pi^3) Gamma(1/24) Gamma(5/24) Gamma(7/24) Gamma(11/24)",
            bessel_laplace_lhs,
            bessel_laplace_rhs,
            tolerance=Tolerance(F(1, 10**30)),
            cross_plans=(("8^(-1/2)", inverse_sqrt8),),
        ),
        IdentityCase(
            "I7",
            "phi(1) with kernel log(1+x) equals int_0^inf e^{-t}/(1+t) dt",
            gompertz_summed,
            gompertz_direct,
            tolerance=Tolerance(F(1, 10**40)),
        ),
        IdentityCase(
            "I8",
            "z^2 phi' + (1 - s z) phi - 1 = 0 for the binomial series",
            binomial_ode_residual,
            zero,
            grid=tuple((("s", s), ("z", z)) for s in BINOMIAL_S for z in BINOMIAL_Z),
            tolerance=Tolerance(F(1, 2**100)),
        ),
        IdentityCase(
            "I9",
            "int_0^inf (1 - (1+x) e^{-x}) / (x (1+x)) dx = gamma",
            euler_integral_lhs,
            euler_oracle_side,
        ),
        IdentityCase(
            "I10",
            "int_0^inf cos(x)/(1+x^2) dx = pi/(2e)",
            cosine_lhs,
            cosine_rhs,
            tolerance=Tolerance(F(1, 10**12)),
        ),
        IdentityCase(
            "I11",
            "(1/z) G(1/z) = int_0^inf e^{-xz} F(x) dx",
            duality_lhs,
            duality_rhs,
            grid=tuple((("g", g), ("z", F(2))) for g in ("geometric", "identity", "log")),
        ),
        IdentityCase(
            "I12",
            "e^z E_{1,1}(-z) = (e^z - 1)/z",
            psi_one_lhs,
            psi_one_rhs,
            grid=tuple((("z", z),) for z in (F(1, 2), F(1), F(3))),
        ),
    ]


def case_ids() -> list[str]:
    return [c.id for c in catalog()]


def expand(cases: Iterable[IdentityCase] | None = None) -> list[CaseInstance]:
    return [inst for case in (catalog() if cases is None else cases) for inst in case.expand()]


# ---------------------------------------------------------------------------
# verification


def _classify(lhs: acb, rhs: acb, cross: dict[str, acb], tol: arb) -> tuple[str, str]:
    balls = [("lhs", lhs), ("rhs", rhs)] + list(cross.items())
    for i, (n1, b1) in enumerate(balls):
        for n2, b2 in balls[i + 1 :]:
            if not balls_intersect(b1, b2):
                return FAIL, f"{n1} and {n2} are disjoint"
    worst = max(radius(b) for _, b in balls)
    second = sorted((radius(b) for _, b in balls), key=float)[-2]
    if worst + second <= tol:
        return PASS, ""
    return INCONCLUSIVE, "enclosures intersect but are wider than the tolerance"


def _evaluate(inst: CaseInstance, pctx: PrecisionContext) -> tuple[acb, acb, dict[str, acb]]:
    lhs = to_acb(inst.lhs(pctx))
    rhs = to_acb(inst.rhs(pctx))
    cross = {name: to_acb(plan(pctx)) for name, plan in inst.cross}
    return lhs, rhs, cross


def _gap(lhs: acb, rhs: acb, bits: int) -> arb:
    with PrecisionContext(bits).scoped():
        return (lhs - rhs).abs_upper()


def verify(
    case: IdentityCase | CaseInstance,
    pctx: PrecisionContext,
    refine: bool = True,
    max_bits: int | None = None,
) -> VerificationReport:
    """Evaluate both plans and classify; one refinement at doubled bits if inconclusive."""
    if isinstance(case, IdentityCase):
        instances = case.expand()
        if len(instances) != 1:
            raise ValueError(f"{case.id} has {len(instances)} instances; verify each CaseInstance")
        case = instances[0]
    cap = max_bits_from_env() if max_bits is None else max_bits
    tol = case.tolerance.bound(pctx.work_bits)
    start = time.perf_counter()
    bits = pctx.work_bits
    lhs = rhs = gap = None
    cross: dict[str, acb] = {}
    try:
        lhs, rhs, cross = _evaluate(case, pctx)
        status, cause = _classify(lhs, rhs, cross, tol)
        if status == INCONCLUSIVE and refine and 2 * bits <= cap:
            bits *= 2
            lhs, rhs, cross = _evaluate(case, pctx.with_bits(bits))
            status, cause = _classify(lhs, rhs, cross, tol)
        gap = _gap(lhs, rhs, bits)
    except (GevreyError, ValueError, ArithmeticError) as exc:
        status, cause = FAIL, f"{type(exc).__name__}: {exc}"
    return VerificationReport(
        id=case.id,
        params=case.params,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        status=status,
        bits=bits,
        seconds=time.perf_counter() - start,
        cause=cause,
        cross=cross,
    )


def _verify_job(args: tuple[CaseInstance, int, int | None]) -> VerificationReport:
    inst, bits, max_bits = args
    return verify(inst, PrecisionContext(bits), max_bits=max_bits)


# flint balls do not pickle; reports travel as (mantissa, exponent) pairs.
# Rebuilding a ball rounds its radius up by one unit in the 30-bit radius mantissa.
def _pack_arb(x: arb) -> tuple[tuple[int, int], tuple[int, int]]:
    (m, e), (rm, re) = x.mid().man_exp(), x.rad().man_exp()
    return (int(m), int(e)), (int(rm), int(re))


def _unpack_arb(packed) -> arb:
    mid, rad = packed
    return arb(arb(mid), arb(rad))


def _pack_acb(z: acb | None):
    return None if z is None else (_pack_arb(z.real), _pack_arb(z.imag))


def _unpack_acb(packed) -> acb | None:
    return None if packed is None else acb(_unpack_arb(packed[0]), _unpack_arb(packed[1]))


def _remote_job(args: tuple[CaseInstance, int, int | None]) -> dict[str, object]:
    r = _verify_job(args)
    packed = dict(r.__dict__)
    packed.update(
        lhs=_pack_acb(r.lhs),
        rhs=_pack_acb(r.rhs),
        gap=None if r.gap is None else _pack_arb(r.gap),
        cross={k: _pack_acb(v) for k, v in r.cross.items()},
    )
    return packed


def _unpack_report(packed: dict[str, object]) -> VerificationReport:
    fields = dict(packed)
    fields.update(
        lhs=_unpack_acb(packed["lhs"]),
        rhs=_unpack_acb(packed["rhs"]),
        gap=None if packed["gap"] is None else _unpack_arb(packed["gap"]),
        cross={k: _unpack_acb(v) for k, v in packed["cross"].items()},
    )
    return VerificationReport(**fields)


def select(ids: Iterable[str] | None) -> list[CaseInstance]:
    """Instances for the given case ids (all cases when ``ids`` is None)."""
    cases = catalog()
    if ids is None:
        return expand(cases)
    wanted = set(ids)
    unknown = wanted - {c.id for c in cases}
    if unknown:
        raise ValueError(f"unknown identity ids: {', '.join(sorted(unknown))}")
    return expand(c for c in cases if c.id in wanted)


def verify_all(
    ids: Iterable[str] | None,
    pctx: PrecisionContext,
    jobs: int = 1,
    max_bits: int | None = None,
) -> list[VerificationReport]:
    """Verify every selected instance; output order follows the catalog whatever ``jobs`` is."""
    instances = select(ids)
    order = {cid: i for i, cid in enumerate(case_ids())}
    work = [(inst, pctx.work_bits, max_bits) for inst in instances]
    # serial runs take the same transport round trip so radii match across job counts
    if jobs <= 1 or len(work) <= 1:
        reports = [_unpack_report(_remote_job(w)) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = [_unpack_report(r) for r in pool.map(_remote_job, work)]
    keyed = sorted(zip(instances, reports), key=lambda pair: (order[pair[0].id], pair[0].index))
    return [r for _, r in keyed]


def exit_status(reports: Sequence[VerificationReport]) -> int:
    return 0 if all(r.status == PASS for r in reports) else 1


__all__ = [
    "CaseInstance",
    "IdentityCase",
    "Tolerance",
    "VerificationReport",
    "case_ids",
    "catalog",
    "exit_status",
    "expand",
    "select",
    "verify",
    "verify_all",
]
