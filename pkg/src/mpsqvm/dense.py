"""Dense statevector simulation, the exact cross-check route.

Shares the MPS bit-order convention: qubit 1 is the most significant
bit of the basis index, so ``vec[k]`` is the amplitude of the basis
label given by k's binary expansion read left to right.
"""

from __future__ import annotations

import numpy as np

_PAULI = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def zero_state(n_qubits: int) -> np.ndarray:
    if n_qubits < 1:
        raise ValueError("n_qubits must be >= 1")
    vec = np.zeros(2**n_qubits, dtype=complex)
    vec[0] = 1.0
    return vec


def _n_qubits(vec: np.ndarray) -> int:
    n = vec.size.bit_length() - 1
    if vec.size != 2**n or n < 1:
        raise ValueError("vector length must be a power of 2, >= 2")
    return n


def apply_one_qubit(vec: np.ndarray, site: int,
                    matrix: np.ndarray) -> np.ndarray:
    """Apply a 2x2 matrix to 1-based ``site`` of a dense state."""
    n = _n_qubits(vec)
    if not 1 <= site <= n:
        raise ValueError(f"site {site} out of range 1..{n}")
    psi = vec.reshape((2,) * n)
    psi = np.tensordot(np.asarray(matrix, dtype=complex), psi,
                       axes=([1], [site - 1]))
    psi = np.moveaxis(psi, 0, site - 1)
    return np.ascontiguousarray(psi).reshape(-1)


def apply_two_qubit(vec: np.ndarray, site_a: int, site_b: int,
                    matrix: np.ndarray) -> np.ndarray:
    """Apply a 4x4 matrix to the ordered pair (site_a, site_b).

    The matrix convention matches MpsState.apply_two_qubit: q_a is the
    most significant bit of the 4-dim gate basis.
    """
    n = _n_qubits(vec)
    if site_a == site_b:
        raise ValueError("sites must differ")
    for site in (site_a, site_b):
        if not 1 <= site <= n:
            raise ValueError(f"site {site} out of range 1..{n}")
    gate = np.asarray(matrix, dtype=complex).reshape(2, 2, 2, 2)
    psi = vec.reshape((2,) * n)
    psi = np.tensordot(gate, psi, axes=([2, 3], [site_a - 1, site_b - 1]))
    psi = np.moveaxis(psi, [0, 1], [site_a - 1, site_b - 1])
    return np.ascontiguousarray(psi).reshape(-1)


def pauli_expectation(vec: np.ndarray, factors: dict[int, str]) -> float:
    """<vec| P |vec> for a product of single-site Paulis."""
    transformed = vec
    for site, name in factors.items():
        transformed = apply_one_qubit(transformed, site, _PAULI[name])
    value = np.vdot(vec, transformed)
    if abs(value.imag) > 1e-10:
        raise ValueError(f"nonreal Pauli expectation: {value}")
    return float(value.real)


def bipartition_entropy(vec: np.ndarray, n_a: int) -> float:
    """Entropy (nats) of the left n_a qubits via the reduced density matrix.

    Deliberately the heavyweight route: materialize rho_A and take its
    eigenvalues, independent of any Schmidt-spectrum shortcut.
    """
    n = _n_qubits(vec)
    if not 1 <= n_a <= n - 1:
        raise ValueError(f"n_a {n_a} out of range 1..{n - 1}")
    block = vec.reshape(2**n_a, 2**(n - n_a))
    rho = block @ block.conj().T
    eigenvalues = np.linalg.eigvalsh(rho)
    eigenvalues = eigenvalues[eigenvalues > 1e-14]
    return float(-np.sum(eigenvalues * np.log(eigenvalues)))


def schmidt_values(vec: np.ndarray, n_a: int) -> np.ndarray:
    """Singular values of the (left n_a | rest) matricization."""
    n = _n_qubits(vec)
    if not 1 <= n_a <= n - 1:
        raise ValueError(f"n_a {n_a} out of range 1..{n - 1}")
    block = vec.reshape(2**n_a, 2**(n - n_a))
    return np.linalg.svd(block, compute_uv=False)
