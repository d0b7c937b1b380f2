"""Named gate catalog and Haar-random sampling.

Rotation conventions (global phase is fixed once here; expectation values
never see it):

    Rx(t) = cos(t/2) I - i sin(t/2) X
    Ry(t) = cos(t/2) I - i sin(t/2) Y
    Rz(t) = diag(exp(-i t/2), exp(+i t/2))
    Rzz(t) = diag(exp(-i t/2), exp(+i t/2), exp(+i t/2), exp(-i t/2))

Two-qubit matrices act on the ordered pair (a, b) with a as the most
significant factor: basis order |00>, |01>, |10>, |11>.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_SQ2 = 1.0 / np.sqrt(2.0)

_FIXED_ONE_QUBIT = {
    "H": np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "T": np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex),
}

_FIXED_TWO_QUBIT = {
    "CNOT": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
                     dtype=complex),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "SWAP": np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
                     dtype=complex),
}

ROTATION_GATES = ("Rx", "Ry", "Rz", "Rzz")

#: Every gate name the catalog accepts, as the exact ASCII strings that
#: cross the shared-library boundary.  "CX" is an alias for "CNOT".
GATE_NAMES = ("H", "X", "Y", "Z", "S", "T", "Rx", "Ry", "Rz",
              "CNOT", "CX", "CZ", "SWAP", "Rzz")


class UnknownGateError(ValueError):
    """Raised for a gate name outside the catalog."""


@dataclass(frozen=True)
class GateSpec:
    """A named gate, with its angle when parameterized."""

    name: str
    angle: float | None = None

    @property
    def arity(self) -> int:
        name = "CNOT" if self.name == "CX" else self.name
        if name in _FIXED_ONE_QUBIT or name in ("Rx", "Ry", "Rz"):
            return 1
        if name in _FIXED_TWO_QUBIT or name == "Rzz":
            return 2
        raise UnknownGateError(f"unknown gate {self.name!r}")


def gate_matrix(spec: GateSpec) -> np.ndarray:
    """Return the unitary matrix (2x2 or 4x4) for a gate spec."""
    name = "CNOT" if spec.name == "CX" else spec.name
    if name in _FIXED_ONE_QUBIT or name in _FIXED_TWO_QUBIT:
        if spec.angle is not None:
            raise ValueError(f"gate {spec.name!r} takes no angle")
        table = _FIXED_ONE_QUBIT if name in _FIXED_ONE_QUBIT else _FIXED_TWO_QUBIT
        return table[name].copy()
    if name in ROTATION_GATES:
        if spec.angle is None:
            raise ValueError(f"gate {spec.name!r} requires an angle")
        half = 0.5 * spec.angle
        c, s = np.cos(half), np.sin(half)
        if name == "Rx":
            return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
        if name == "Ry":
            return np.array([[c, -s], [s, c]], dtype=complex)
        if name == "Rz":
            return np.diag([np.exp(-1j * half), np.exp(1j * half)])
        # Rzz: phase exp(-i t/2) on aligned bit pairs, exp(+i t/2) otherwise
        return np.diag([np.exp(-1j * half), np.exp(1j * half),
                        np.exp(1j * half), np.exp(-1j * half)])
    raise UnknownGateError(f"unknown gate {spec.name!r}")


def is_unitary(matrix: np.ndarray, tol: float = 1e-10) -> bool:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    eye = np.eye(matrix.shape[0])
    return bool(np.max(np.abs(matrix @ matrix.conj().T - eye)) <= tol)


class HaarSampler:
    """Reproducible sampler of Haar-random pure states of ``n_qubits``.

    States are drawn as complex Gaussian (Ginibre) vectors and normalized,
    which is exactly Haar-uniform on the unit sphere.  Identical seeds
    yield identical sample streams on a given platform.
    """

    def __init__(self, seed: int, n_qubits: int):
        if n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        self.seed = seed
        self.n_qubits = n_qubits
        self.dimension = 2**n_qubits
        self._rng = np.random.default_rng(seed)

    def sample_state(self) -> np.ndarray:
        z = self._rng.standard_normal(self.dimension) \
            + 1j * self._rng.standard_normal(self.dimension)
        return z / np.linalg.norm(z)


def sample_haar_state(sampler: HaarSampler) -> np.ndarray:
    """Draw the next Haar-random state from the sampler's stream."""
    return sampler.sample_state()


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a Ginibre matrix.

    The phase fix (dividing out the phases of R's diagonal) removes the
    bias of plain QR; without it the distribution is not Haar.
    """
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
