"""One test per acceptance criterion; each prints a PASS/FAIL line."""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from flint import acb, arb

from gevrey import borel, identities
from gevrey.ball import PrecisionContext, rational_ball
from gevrey.oracles import euler_gamma_oracle, log_oracle, pi_oracle
from gevrey.relations import FOUND, NONE_UP_TO_HEIGHT, ConstantVector, probe_conjecture3, probe_mixed_independence, pslq
from gevrey.series import EFunctionSpec, eval_E

P256 = PrecisionContext(256)


def _rounds_to(x: arb, text: str) -> bool:
    """``x`` lies within half a unit of the last digit of ``text``."""
    places = len(text.split(".")[1])
    with P256.scoped():
        return bool(abs(x - arb(text)) < arb(10) ** -places / 2)


def _lead(x: arb, n: int = 20) -> str:
    """First ``n`` significant digits of the midpoint."""
    with P256.scoped():
        return x.mid().str(n, radius=False)


def test_c01_gamma_derivatives(criterion):
    reports = identities.verify_all(["I1"], P256)
    tol = arb(2) ** -180
    bad = [r.label for r in reports if r.status != identities.PASS or not r.gap <= tol or r.seconds > 5]
    spot = {dict(r.params)["a"]: r for r in reports if dict(r.params)["s"] == 0}
    with P256.scoped():
        root_pi = pi_oracle(P256).sqrt()
        spots = (
            1 in spot[Fraction(1)].lhs.real
            and 1 in spot[Fraction(1)].rhs.real
            and spot[Fraction(1, 2)].lhs.real.overlaps(root_pi)
            and spot[Fraction(1, 2)].rhs.real.overlaps(root_pi)
        )
    slowest = max(r.seconds for r in reports)
    criterion(
        1,
        len(reports) == 21 and not bad and spots,
        f"I1: {len(reports)} instances, gap <= 2^-180, slowest {slowest:.2f}s, spot values ok={spots}, bad={bad}",
    )


def test_c02_euler_constant(criterion):
    (r,) = identities.verify_all(["I3"], P256)
    oracle = euler_gamma_oracle(P256)
    with P256.scoped():
        agree = abs(r.lhs.real - oracle).upper()
    ok = r.status == identities.PASS and agree <= arb(10) ** -50 and _rounds_to(r.lhs.real, "0.5772156649")
    criterion(2, ok, f"I3 vs gamma oracle: |diff| <= {agree.str(3)}, lhs {_lead(r.lhs.real)}")


def test_c03_euler_constancy(criterion):
    reports = identities.verify_all(["I2"], P256)
    zs = [dict(r.params)["z"] for r in reports]
    with P256.scoped():
        worst = max(abs(a.lhs - b.lhs).upper() for i, a in enumerate(reports) for b in reports[i + 1 :])
        common = reports[0].lhs.real.intersection(reports[1].lhs.real).intersection(reports[2].lhs.real)
        meets_oracle = common.overlaps(euler_gamma_oracle(P256))
    ok = sorted(zs) == [1, 2, 5] and worst <= arb(2) ** -150 and meets_oracle
    criterion(3, ok, f"I2 at z=1,2,5: pairwise gap <= {worst.str(3)}, common part meets oracle={meets_oracle}")


def test_c04_log2(criterion):
    (r,) = identities.verify_all(["I4"], P256)
    with P256.scoped():
        agree = abs(r.lhs.real - log_oracle(2, P256)).upper()
    ok = r.status == identities.PASS and agree <= arb(10) ** -50 and _rounds_to(r.lhs.real, "0.6931471806")
    criterion(4, ok, f"I4 vs log oracle: |diff| <= {agree.str(3)}, lhs {_lead(r.lhs.real)}")


def test_c05_dirichlet(criterion):
    reports = identities.verify_all(["I5"], P256)
    with P256.scoped():
        half_pi = pi_oracle(P256) / 2
        within = all(abs(r.lhs.real - half_pi).upper() <= arb(10) ** -10 for r in reports)
    ok = all(r.status == identities.PASS for r in reports) and within
    methods = ", ".join(f"{dict(r.params)['method']}={r.status}" for r in reports)
    criterion(5, ok, f"I5 at 1e-10 ({methods}), value {_lead(reports[0].lhs.real)}")


def test_c06_bessel_laplace(criterion):
    p = PrecisionContext(256)
    quad = identities.bessel_laplace_lhs(p).real
    gamma_side = identities.bessel_laplace_rhs(p).real
    const = identities.inverse_sqrt8(p).real
    with p.scoped():
        tol = arb(10) ** -30
        gaps = {
            "quad-gamma": abs(quad - gamma_side).upper(),
            "quad-8^-1/2": abs(quad - const).upper(),
            "gamma-8^-1/2": abs(gamma_side - const).upper(),
        }
    ok = all(g <= tol for g in gaps.values())
    detail = ", ".join(f"{k} {v.str(3)}" for k, v in gaps.items())
    criterion(6, ok, f"I6 three-way agreement at 1e-30: {detail}")


def test_c07_gompertz(criterion):
    (r,) = identities.verify_all(["I7"], P256)
    with P256.scoped():
        gap = abs(r.lhs - r.rhs).upper()
    ok = r.status == identities.PASS and gap <= arb(10) ** -40 and _rounds_to(r.lhs.real, "0.5963473623")
    criterion(7, ok, f"I7 two quadratures: gap <= {gap.str(3)}, value {_lead(r.lhs.real)}")


def test_c08_binomial_ode(criterion):
    reports = identities.verify_all(["I8"], P256)
    with P256.scoped():
        worst = max(abs(r.lhs).upper() for r in reports)
    ok = len(reports) == 9 and all(r.status == identities.PASS for r in reports) and worst <= arb(2) ** -100
    criterion(8, ok, f"I8: {len(reports)} residuals, largest <= {worst.str(3)}")


def test_c09_optimal_truncation(criterion):
    p = PrecisionContext(128)
    spec = borel.AntiESpec(1, 1)
    checks = [borel.gevrey_asymptotics_check(spec, 20, N, p) for N in range(1, 13)]
    smallest = min((c.error.upper() for c in checks), key=float)
    ok = all(c.passed for c in checks) and smallest <= arb(10) ** -6
    criterion(9, ok, f"N=1..12 at z=20: all within 2x first omitted={all(c.passed for c in checks)}, min error {smallest.str(3)}")


def test_c10_relation_probes(criterion):
    H = 10**12
    verdicts = [probe_conjecture3(Fraction(a), s, 150, H).verdict for a, s in [(1, 1), ("1/2", 0), ("1/3", 2)]]
    verdicts += [probe_mixed_independence(alpha, rho, 150, H).verdict for alpha, rho in [(1, 1), (2, -1)]]
    negatives = all(v == NONE_UP_TO_HEIGHT for v in verdicts)

    rng = random.Random(7)
    p = PrecisionContext(600)
    recovered = 0
    trials = 50
    with p.scoped():
        basis = [arb(1), arb(2).sqrt(), arb(3).log(), pi_oracle(p)]
        for _ in range(trials):
            m = [rng.randint(-10**6, 10**6) for _ in range(3)]
            target = rng.randint(1, 10**6)
            x = (m[0] * basis[0] + m[1] * basis[1] + m[2] * basis[2]) / target
            vec = ConstantVector(("1", "sqrt2", "log3", "x"), tuple(basis[:3] + [x]), 150)
            r = pslq(vec, 10**6, p)
            if r.verdict == FOUND and 0 in sum(c * v for c, v in zip(r.relation, vec.values)):
                recovered += 1
    control = probe_conjecture3(1, 0, 150, H)
    ok = negatives and recovered == trials and control.verdict == FOUND
    criterion(10, ok, f"probes {verdicts}; planted {recovered}/{trials}; (1, e, e-1) -> {control.relation}")


def test_c11_nesting_audit(criterion):
    rng = random.Random(11)
    lo, hi = PrecisionContext(128), PrecisionContext(320)
    failures = 0
    n = 10_000
    for _ in range(n):
        kind = rng.choice(("eas", "exp", "i0"))
        if kind == "eas":
            spec = EFunctionSpec.eas(Fraction(rng.randint(1, 40), rng.randint(1, 12)), rng.randint(1, 3))
        elif kind == "exp":
            spec = EFunctionSpec.exp(Fraction(rng.randint(-20, 20), rng.randint(1, 6)))
        else:
            spec = EFunctionSpec.bessel_i0()
        re, im = Fraction(rng.randint(-3000, 3000), 100), Fraction(rng.randint(-3000, 3000), 100)

        def point(p):
            with p.scoped():
                return acb(rational_ball(re), rational_ball(im))

        coarse = eval_E(spec, point(lo), lo)
        fine = eval_E(spec, point(hi), hi)
        with hi.scoped():
            if not coarse.contains(fine):
                failures += 1
    criterion(11, failures == 0, f"{n} random eval_E calls at 128 vs 320 bits: {failures} not nested")


def test_c12_full_suite_cli(criterion, tmp_path):
    out = tmp_path / "report.json"
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "gevrey", "verify", "--suite", "all", "--bits", "256", "--format", "json", "--out", str(out)],
        capture_output=True,
        text=True,
        env=dict(os.environ),
        check=False,
    )
    elapsed = time.perf_counter() - start
    rows = json.loads(out.read_text()) if out.exists() else []
    failing = sorted({r["id"] for r in rows if r["status"] != "pass"})
    ok = proc.returncode == 0 and elapsed < 300 and len(rows) >= 30
    criterion(12, ok, f"verify --suite all --bits 256: exit {proc.returncode}, {len(rows)} reports, {elapsed:.1f}s, not passing {failing}")
