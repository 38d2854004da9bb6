from __future__ import annotations

import random

import pytest
from flint import arb

from gevrey.ball import ParameterError, PrecisionContext
from gevrey.relations import (
    FOUND,
    INSUFFICIENT,
    NONE_UP_TO_HEIGHT,
    ConstantVector,
    probe_conjecture3,
    probe_mixed_independence,
    pslq,
    required_digits,
)

P = PrecisionContext(700)


def _vector(values, digits=150):
    return ConstantVector(tuple(f"x{i}" for i in range(len(values))), tuple(values), digits)


def test_required_digits():
    assert required_digits(3, 10**12) == 46
    assert required_digits(2, 1) == 12


@pytest.mark.parametrize("a,s", [(1, 1), ("1/2", 0), ("1/3", 2)])
def test_eas_probe_finds_nothing(a, s):
    from fractions import Fraction

    r = probe_conjecture3(Fraction(a), s, 150, 10**12)
    assert r.verdict == NONE_UP_TO_HEIGHT and r.relation is None
    assert r.norm_bound > 3**0.5 * 10**12


@pytest.mark.parametrize("alpha,rho", [(1, 1), (2, -1)])
def test_mixed_probe_finds_nothing(alpha, rho):
    r = probe_mixed_independence(alpha, rho, 150, 10**12)
    assert r.verdict == NONE_UP_TO_HEIGHT


def test_positive_controls():
    with P.scoped():
        e = arb(1).exp()
        r = pslq(_vector([arb(1), e, e - 1]), 10**12, P)
    assert r.verdict == FOUND and r.relation == (1, -1, 1)
    # a = 1, s = 0 gives e E_{1,1}(-1) = e - 1
    assert probe_conjecture3(1, 0, 150, 10**12).relation == (1, -1, 1)


def test_planted_relations():
    rng = random.Random(20240601)
    found = 0
    with P.scoped():
        basis = [arb(1), arb(2).sqrt(), arb(3).log(), arb(1).exp()]
        for _ in range(100):
            m = [rng.randint(-1000, 1000) for _ in range(3)]
            while m[2] == 0:
                m[2] = rng.randint(-1000, 1000)
            # x3 = (m0 + m1 sqrt2 + m2 log3) / 1  -> relation (m0, m1, m2, -1) on (1, sqrt2, log3, x3)
            x3 = m[0] * basis[0] + m[1] * basis[1] + m[2] * basis[2]
            r = pslq(_vector(basis[:3] + [x3]), 10**4, P)
            if r.verdict == FOUND:
                rel = r.relation
                total = sum(c * v for c, v in zip(rel, basis[:3] + [x3]))
                assert 0 in total
                found += 1
    assert found == 100


def test_insufficient_precision():
    with P.scoped():
        v = _vector([arb(1), arb(1).exp(), arb(2).sqrt()], digits=20)
    assert pslq(v, 10**12, P).verdict == INSUFFICIENT
    assert probe_conjecture3(1, 1, 20, 10**12).verdict == INSUFFICIENT


def test_degenerate_vectors():
    with P.scoped():
        assert pslq(_vector([arb(1), arb(2), arb(3)]), 10, P).relation == (1, 1, -1)
        e = arb(1).exp()
        assert pslq(_vector([arb(1), e, e]), 10, P).relation == (0, 1, -1)
        assert pslq(_vector([arb(0), e]), 10, P).relation == (1, 0)
    with pytest.raises(ParameterError):
        _vector([arb(1)])
    with pytest.raises(ParameterError):
        ConstantVector(("a", "b"), (arb(1), arb(1, 1e-5)), 150)
    with pytest.raises(ParameterError):
        probe_mixed_independence(-1, 1, 150, 10)
    with pytest.raises(ParameterError):
        probe_conjecture3(0, 1, 150, 10)


def test_wire_form():
    w = probe_mixed_independence(1, 1, 150, 10**12).to_wire()
    assert w["verdict"] == NONE_UP_TO_HEIGHT and w["relation"] is None
    assert w["height_bound"] == str(10**12) and w["digits_used"] == "150"
