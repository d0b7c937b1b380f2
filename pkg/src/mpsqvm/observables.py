"""Pauli-sum expectation values over an MPS, and the MaxCut cost.

Terms are evaluated by left-to-right transfer-matrix contraction of
<psi|P|psi> rather than through an explicit operator network: the cost
Hamiltonian here is a sum of 2-local Z terms, so per-term contraction
is exact and cheaper.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .mps import MpsState

_PAULI = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class PauliTerm:
    """coefficient times a product of single-site Pauli factors.

    factors maps 1-based sites to 'X', 'Y' or 'Z'; absent sites carry
    the identity.
    """

    coefficient: float
    factors: Mapping[int, str]

    def __post_init__(self):
        for site, name in self.factors.items():
            if name not in _PAULI:
                raise ValueError(f"unknown Pauli factor {name!r}")
            if site < 1:
                raise ValueError(f"site {site} must be >= 1")


@dataclass(frozen=True)
class IsingCost:
    """Weighted-graph cut Hamiltonian: (1/2) sum_ij w_ij (I - Z_i Z_j)."""

    n_qubits: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        seen = set()
        for i, j, w in self.edges:
            if not (1 <= i < j <= self.n_qubits):
                raise ValueError(f"edge ({i}, {j}) must satisfy 1 <= i < j <= N")
            if w <= 0:
                raise ValueError(f"edge ({i}, {j}) weight must be positive")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))

    @property
    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))


def expectation(state: MpsState, term: PauliTerm) -> float:
    """<psi| term |psi>, a real number within [-|coeff|, +|coeff|]."""
    for site in term.factors:
        if site > state.n_qubits:
            raise ValueError(f"site {site} out of range 1..{state.n_qubits}")
    env = np.ones((1, 1), dtype=complex)
    for index, tensor in enumerate(state.tensors, start=1):
        partial = np.tensordot(env, tensor, axes=([1], [0]))
        name = term.factors.get(index)
        if name is not None:
            partial = np.einsum("pq,aqr->apr", _PAULI[name], partial)
        env = np.tensordot(tensor.conj(), partial, axes=([0, 1], [0, 1]))
    value = term.coefficient * complex(env[0, 0])
    if abs(value.imag) > 1e-10:
        raise ValueError(f"nonreal Pauli expectation: {value}")
    return float(value.real)


def cost_expectation(state: MpsState, cost: IsingCost) -> float:
    """Expected cut weight: (1/2) sum_(i,j,w) w * (1 - <Z_i Z_j>).

    The experiment layer reports the negated value (lower is better) as
    its energy; this function itself returns the nonnegative cut weight.
    """
    if cost.n_qubits != state.n_qubits:
        raise ValueError("cost and state qubit counts differ")
    total = 0.0
    for i, j, w in cost.edges:
        zz = expectation(state, PauliTerm(1.0, {i: "Z", j: "Z"}))
        total += w * (1.0 - zz)
    return 0.5 * total
