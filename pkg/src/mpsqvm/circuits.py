"""Gate sequences runnable on both simulation backends.

A circuit is an ordered list of CircuitOp values.  The same list can be
executed on an MpsState (truncating backend) or a dense statevector
(exact backend), which is the basis of every cross-check in the test
suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import dense
from .gates import GateSpec, gate_matrix
from .mps import MpsState

_ONE_QUBIT_NAMES = ("H", "X", "Y", "Z", "S", "T", "Rx", "Ry", "Rz")
_TWO_QUBIT_NAMES = ("CNOT", "CZ", "SWAP", "Rzz")
_PARAMETERIZED = ("Rx", "Ry", "Rz", "Rzz")


@dataclass(frozen=True)
class CircuitOp:
    """One gate bound to the 1-based sites it acts on."""

    gate: GateSpec
    sites: tuple[int, ...]

    def __post_init__(self):
        if len(self.sites) != self.gate.arity:
            raise ValueError(
                f"gate {self.gate.name!r} takes {self.gate.arity} sites, "
                f"got {len(self.sites)}")


def run_mps(state: MpsState, ops: list[CircuitOp]) -> MpsState:
    """Apply the ops in order, mutating and returning the state."""
    for op in ops:
        matrix = gate_matrix(op.gate)
        if op.gate.arity == 1:
            state.apply_one_qubit(op.sites[0], matrix)
        else:
            state.apply_two_qubit(op.sites[0], op.sites[1], matrix)
    return state


def run_dense(vec: np.ndarray, ops: list[CircuitOp]) -> np.ndarray:
    """Apply the ops in order to a dense statevector, returning a new one."""
    for op in ops:
        matrix = gate_matrix(op.gate)
        if op.gate.arity == 1:
            vec = dense.apply_one_qubit(vec, op.sites[0], matrix)
        else:
            vec = dense.apply_two_qubit(vec, op.sites[0], op.sites[1], matrix)
    return vec


def random_circuit(n_qubits: int, n_gates: int,
                   rng: np.random.Generator) -> list[CircuitOp]:
    """Uniformly random circuit over the full gate catalog.

    Two-qubit gates pick unordered-distinct sites anywhere on the chain,
    so non-adjacent routing is exercised.  Angles are uniform in
    [0, 2*pi).
    """
    if n_qubits < 2:
        raise ValueError("random circuits need at least 2 qubits")
    ops = []
    for _ in range(n_gates):
        if rng.random() < 0.5:
            name = _ONE_QUBIT_NAMES[rng.integers(len(_ONE_QUBIT_NAMES))]
            sites = (int(rng.integers(1, n_qubits + 1)),)
        else:
            name = _TWO_QUBIT_NAMES[rng.integers(len(_TWO_QUBIT_NAMES))]
            pair = rng.choice(n_qubits, size=2, replace=False) + 1
            sites = (int(pair[0]), int(pair[1]))
        angle = float(rng.uniform(0.0, 2.0 * np.pi)) if name in _PARAMETERIZED else None
        ops.append(CircuitOp(GateSpec(name, angle), sites))
    return ops
