from __future__ import annotations

import pytest
from flint import arb

from gevrey.ball import PrecisionContext


def ref(text: str, bits: int = 256) -> arb:
    """Reference decimal as a ball (the decimal itself is exact to its last digit)."""
    digits = len(text.split(".")[1]) if "." in text else 0
    with PrecisionContext(bits).scoped():
        return arb(text) + arb(0, arb(10) ** (-digits))


@pytest.fixture
def p256() -> PrecisionContext:
    return PrecisionContext(256)


@pytest.fixture
def p128() -> PrecisionContext:
    return PrecisionContext(128)


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record an acceptance verdict, print it, then assert it."""

    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
