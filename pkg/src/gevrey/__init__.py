"""Rigorous ball-arithmetic evaluation of E-functions, Borel-Laplace sums of
Gevrey-1 series, and numerical checks of identities that connect them."""

from __future__ import annotations

from .ball import (
    Ball,
    ComplexBall,
    DomainError,
    GevreyError,
    ParameterError,
    PrecisionContext,
    PrecisionExhausted,
)
from .borel import AntiESpec, DirectionError, MixedFunctionSpec, eval_mixed, laplace_sum, laplace_sum_derivative
from .identities import VerificationReport, catalog, verify, verify_all
from .oracles import euler_gamma_oracle, gamma_deriv_oracle, gamma_oracle, log_oracle, pi_oracle
from .relations import ConstantVector, ProbeResult, probe_conjecture3, probe_mixed_independence, pslq
from .series import EFunctionSpec, eval_E

__version__ = "0.1.0"

__all__ = [
    "AntiESpec",
    "Ball",
    "ComplexBall",
    "ConstantVector",
    "DirectionError",
    "DomainError",
    "EFunctionSpec",
    "GevreyError",
    "MixedFunctionSpec",
    "ParameterError",
    "PrecisionContext",
    "PrecisionExhausted",
    "ProbeResult",
    "VerificationReport",
    "catalog",
    "euler_gamma_oracle",
    "eval_E",
    "eval_mixed",
    "gamma_deriv_oracle",
    "gamma_oracle",
    "laplace_sum",
    "laplace_sum_derivative",
    "log_oracle",
    "pi_oracle",
    "probe_conjecture3",
    "probe_mixed_independence",
    "pslq",
    "verify",
    "verify_all",
]
