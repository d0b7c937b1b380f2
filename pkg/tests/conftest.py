"""Shared fixtures and import path setup for the test suite."""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mpsqvm.gates import GateSpec, gate_matrix  # noqa: E402
from mpsqvm.mps import MpsState  # noqa: E402
from mpsqvm.tensor import TruncationPolicy  # noqa: E402


ACCEPTANCE_LINES: list[str] = []


def record_criterion(line: str) -> None:
    """Collect a one-line verdict, echoed in the terminal summary."""
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240813)


def build_bell_plus_zero() -> MpsState:
    """|Phi+> on qubits (1, 2) tensored with |0> on qubit 3."""
    state = MpsState.computational_zero(3, TruncationPolicy(max_bond=8))
    state.apply_one_qubit(1, gate_matrix(GateSpec("H")))
    state.apply_two_qubit(1, 2, gate_matrix(GateSpec("CNOT")))
    return state
