from __future__ import annotations

import json
from fractions import Fraction

import pytest
from flint import arb

from conftest import ref
from gevrey import borel, identities, oracles
from gevrey.ball import PrecisionContext
from gevrey.quadrature import quad_interval
from gevrey.identities import FAIL, INCONCLUSIVE, PASS, IdentityCase, verify, verify_all

WIRE_KEYS = {"id", "params", "lhs_mid", "lhs_rad", "rhs_mid", "rhs_rad", "gap", "status", "bits", "seconds"}


def test_catalog_shape():
    cases = identities.catalog()
    assert [c.id for c in cases] == [f"I{i}" for i in range(1, 13)]
    counts = {c.id: len(c.expand()) for c in cases}
    assert counts["I1"] == 21 and counts["I8"] == 9
    assert len(identities.select(None)) == sum(counts.values())
    assert len(identities.select(["I8"])) == 9
    assert identities.select([]) == []
    with pytest.raises(ValueError):
        identities.select(["I99"])


def test_ordering_independent_of_jobs():
    p = PrecisionContext(128)
    serial = verify_all(["I12", "I3", "I11"], p, jobs=1)
    parallel = verify_all(["I12", "I3", "I11"], p, jobs=2)
    assert [r.label for r in serial] == [r.label for r in parallel]
    assert [r.id for r in serial] == ["I3"] + ["I11"] * 3 + ["I12"] * 3
    strip = lambda r: {k: v for k, v in r.to_wire().items() if k != "seconds"}  # noqa: E731
    assert [strip(r) for r in serial] == [strip(r) for r in parallel]


def _record(monkeypatch, module, names, calls):
    for name in names:
        original = getattr(module, name)

        def wrapper(*args, _name=name, _orig=original, **kw):
            calls.append(_name)
            return _orig(*args, **kw)

        monkeypatch.setattr(module, name, wrapper)


@pytest.mark.parametrize("case_id", ["I1", "I3"])
def test_sides_use_disjoint_routes(case_id, monkeypatch):
    p = PrecisionContext(128)
    borel_calls: list[str] = []
    oracle_calls: list[str] = []
    _record(monkeypatch, borel, ["laplace_sum", "eval_mixed", "laplace_sum_derivative"], borel_calls)
    _record(
        monkeypatch,
        oracles,
        ["gamma_deriv_oracle", "gamma_oracle", "euler_gamma_oracle", "log_oracle", "pi_oracle"],
        oracle_calls,
    )
    for inst in identities.select([case_id])[:4]:
        inst.rhs(p)
        assert borel_calls == [] and oracle_calls
        oracle_calls.clear()
        inst.lhs(p)
        assert borel_calls and oracle_calls == []
        borel_calls.clear()


def test_decisiveness_is_monotone_in_precision():
    low = verify_all(["I1", "I2", "I3", "I12"], PrecisionContext(128))
    high = verify_all(["I1", "I2", "I3", "I12"], PrecisionContext(256))
    rank = {FAIL: 0, INCONCLUSIVE: 0, PASS: 1}
    for a, b in zip(low, high):
        assert a.label == b.label
        assert rank[b.status] >= rank[a.status]
        assert b.status != FAIL


def test_plan_exception_is_reported_with_cause():
    def broken(pctx):
        raise ZeroDivisionError("boom")

    case = IdentityCase("X", "broken", broken, identities.zero)
    report = verify(case, PrecisionContext(128))
    assert report.status == FAIL and "boom" in report.cause and report.lhs is None


def test_disjoint_sides_fail_and_wide_sides_are_inconclusive():
    from flint import acb

    one = lambda pctx: acb(1)  # noqa: E731
    two = lambda pctx: acb(2)  # noqa: E731
    fuzzy = lambda pctx: acb(arb(1, 1e-20))  # noqa: E731
    assert verify(IdentityCase("X", "", one, two), PrecisionContext(128)).status == FAIL
    r = verify(IdentityCase("X", "", one, fuzzy), PrecisionContext(128), refine=False)
    assert r.status == INCONCLUSIVE


def test_wire_format():
    (report,) = verify_all(["I3"], PrecisionContext(128))
    wire = report.to_wire()
    assert set(wire) == WIRE_KEYS
    assert all(isinstance(v, str) for k, v in wire.items() if k != "params")
    assert wire["status"] == "pass" and wire["bits"] == "128"
    assert Fraction(wire["lhs_mid"]) > 0
    json.dumps(wire)


def test_binomial_grid_includes_complex_point():
    params = [dict(i.params) for i in identities.select(["I8"])]
    assert {p["z"] for p in params} == {Fraction(1, 2), Fraction(1), "2+1i"}
    assert {p["s"] for p in params} == {Fraction(1, 2), Fraction(-1, 3), Fraction(3, 2)}


def test_bessel_laplace_diagnostic():
    # The Gamma product equals int I0(x)^3 e^{-3x}, while int I0(x) e^{-3x} = 8^{-1/2}.
    p = PrecisionContext(192)
    gamma_side = identities.bessel_laplace_rhs(p)
    single = identities.bessel_laplace_lhs(p)
    with p.scoped():
        assert single.real.overlaps(1 / arb(8).sqrt())
    assert not single.real.overlaps(gamma_side.real)

    # I0(x)^3 e^{-3x} ~ (2 pi x)^{-3/2}, so the tail past 2000 is below 0.003
    head = quad_interval(lambda x, analytic: x.bessel_i(0) ** 3 * (-3 * x).exp(), 0, 2000, p)
    with p.scoped():
        assert head.real < gamma_side.real and abs(head.real - gamma_side.real) < arb("0.003")
    assert gamma_side.real.overlaps(ref("0.50546201971732600605200405322714025998512901481742"))


def test_suite_results_at_256_bits():
    reports = verify_all(None, PrecisionContext(256))
    failing = {r.id for r in reports if r.status != PASS}
    assert failing == {"I6"}
    (i6,) = [r for r in reports if r.id == "I6"]
    assert i6.status == FAIL and "disjoint" in i6.cause
    assert identities.exit_status(reports) == 1
