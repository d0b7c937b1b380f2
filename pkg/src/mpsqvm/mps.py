"""Matrix product state with truncated gate application.

Site tensors are rank-3 complex arrays with axis order (left bond,
physical, right bond); physical dimension is always 2.  Public site and
bond indices are 1-based: bond ``i`` separates sites ``i`` and ``i+1``.
Site 1 maps to the leftmost (most significant) bit of a computational
basis label, so ``to_statevector()[k]`` is the amplitude of the basis
state whose binary expansion, read left to right, gives the qubits in
site order.

Non-adjacent two-qubit gates are routed with nearest-neighbor SWAP
chains; every SWAP-induced split obeys the same truncation policy as
the gate itself.
"""

from __future__ import annotations

import numpy as np

from .gates import _FIXED_TWO_QUBIT, is_unitary
from .tensor import (TruncationPolicy, _split_spectrum, _stable_svd,
                     truncated_svd)

_SWAP = _FIXED_TWO_QUBIT["SWAP"]


class MpsState:
    """A normalized pure state of ``n_qubits`` qubits in MPS form.

    Single-owner mutable: gate application and orthogonalization mutate
    the instance in place.  The orthogonality center is tracked at all
    times (sites left of it are left-isometries, sites right of it are
    right-isometries).
    """

    def __init__(self, tensors: list[np.ndarray], policy: TruncationPolicy,
                 center: int):
        self.tensors = tensors
        self.policy = policy
        self.center = center

    @property
    def n_qubits(self) -> int:
        return len(self.tensors)

    @property
    def bond_dimensions(self) -> tuple[int, ...]:
        """Dimensions of the N-1 internal bonds, left to right."""
        return tuple(t.shape[2] for t in self.tensors[:-1])

    @classmethod
    def computational_zero(cls, n_qubits: int,
                           policy: TruncationPolicy) -> "MpsState":
        """The product state |0...0> with every bond dimension 1."""
        if n_qubits < 1:
            raise ValueError("n_qubits must be >= 1")
        tensors = []
        for _ in range(n_qubits):
            t = np.zeros((1, 2, 1), dtype=complex)
            t[0, 0, 0] = 1.0
            tensors.append(t)
        return cls(tensors, policy, center=1)

    @classmethod
    def from_statevector(cls, amplitudes: np.ndarray,
                         policy: TruncationPolicy) -> "MpsState":
        """Decompose a dense state vector by a left-to-right SVD sweep.

        The vector length must be a power of two and the norm must be 1
        within 1e-8.  With an unconstraining policy the decomposition is
        exact; otherwise each split truncates and (by default)
        renormalizes, so the result stays unit-norm.
        """
        vec = np.asarray(amplitudes, dtype=complex).reshape(-1)
        n = vec.size.bit_length() - 1
        if vec.size < 2 or vec.size != 2**n:
            raise ValueError("amplitude vector length must be a power of 2, >= 2")
        if abs(np.linalg.norm(vec) - 1.0) > 1e-8:
            raise ValueError("amplitude vector must be normalized")
        tensors = []
        current = vec.reshape(1, 2, -1)
        for _ in range(n - 1):
            result = truncated_svd(current, row_axes=(0, 1), policy=policy)
            tensors.append(result.left_factor)
            carry = result.singular_values[:, None] * result.right_factor
            current = carry.reshape(carry.shape[0], 2, -1)
        tensors.append(current)
        return cls(tensors, policy, center=n)

    def to_statevector(self, cap: int = 20) -> np.ndarray:
        """Contract the chain into a dense vector of length 2^N."""
        if self.n_qubits > cap:
            raise ValueError(f"n_qubits={self.n_qubits} exceeds cap={cap}")
        acc = np.ones((1, 1), dtype=complex)
        for t in self.tensors:
            acc = np.tensordot(acc, t, axes=([1], [0]))
            acc = acc.reshape(-1, t.shape[2])
        return acc[:, 0]

    def copy(self) -> "MpsState":
        return MpsState([t.copy() for t in self.tensors], self.policy,
                        self.center)

    def norm(self) -> float:
        """Norm of the state, read off the center tensor."""
        return float(np.linalg.norm(self.tensors[self.center - 1]))

    def inner(self, other: "MpsState") -> complex:
        """<self|other> by left-to-right transfer contraction."""
        if other.n_qubits != self.n_qubits:
            raise ValueError("qubit counts differ")
        env = np.ones((1, 1), dtype=complex)
        for a, b in zip(self.tensors, other.tensors):
            partial = np.tensordot(env, b, axes=([1], [0]))
            env = np.tensordot(a.conj(), partial, axes=([0, 1], [0, 1]))
        return complex(env[0, 0])

    # -- canonical form ---------------------------------------------------

    def _check_site(self, site: int) -> None:
        if not 1 <= site <= self.n_qubits:
            raise ValueError(f"site {site} out of range 1..{self.n_qubits}")

    def _move_center_right(self) -> None:
        i = self.center - 1
        t = self.tensors[i]
        left, phys, right = t.shape
        q, r = np.linalg.qr(t.reshape(left * phys, right))
        self.tensors[i] = q.reshape(left, phys, -1)
        self.tensors[i + 1] = np.tensordot(r, self.tensors[i + 1],
                                           axes=([1], [0]))
        self.center += 1

    def _move_center_left(self) -> None:
        i = self.center - 1
        t = self.tensors[i]
        left, phys, right = t.shape
        q, r = np.linalg.qr(t.reshape(left, phys * right).T)
        self.tensors[i] = q.T.reshape(-1, phys, right)
        self.tensors[i - 1] = np.tensordot(self.tensors[i - 1], r.T,
                                           axes=([2], [0]))
        self.center -= 1

    def orthogonalize(self, site: int) -> None:
        """Move the orthogonality center to ``site`` by QR sweeps.

        Pure gauge transformation: amplitudes are unchanged.
        """
        self._check_site(site)
        while self.center < site:
            self._move_center_right()
        while self.center > site:
            self._move_center_left()

    # -- gate application -------------------------------------------------

    def apply_one_qubit(self, site: int, matrix: np.ndarray) -> None:
        """Contract a 2x2 unitary into the site tensor.

        Bond dimensions are unchanged, so no truncation can occur.
        """
        self._check_site(site)
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (2, 2) or not is_unitary(matrix):
            raise ValueError("one-qubit gate must be a 2x2 unitary")
        self.orthogonalize(site)
        t = self.tensors[site - 1]
        self.tensors[site - 1] = np.tensordot(matrix, t,
                                              axes=([1], [1])).transpose(1, 0, 2)

    def apply_two_qubit(self, site_a: int, site_b: int,
                        matrix: np.ndarray) -> None:
        """Apply a 4x4 unitary to the ordered pair (site_a, site_b).

        The matrix acts on basis |q_a q_b> with q_a as the most
        significant bit.  Non-adjacent pairs are handled by swapping
        site_b next to site_a, applying, and reversing the swaps; every
        split along the way uses the state's truncation policy.
        """
        self._check_site(site_a)
        self._check_site(site_b)
        if site_a == site_b:
            raise ValueError("two-qubit gate sites must differ")
        matrix = np.asarray(matrix, dtype=complex)
        if matrix.shape != (4, 4) or not is_unitary(matrix):
            raise ValueError("two-qubit gate must be a 4x4 unitary")
        if site_a > site_b:
            matrix = _SWAP @ matrix @ _SWAP
            site_a, site_b = site_b, site_a
        # Route site_b leftward to site_a + 1, apply, then unroute.  Fold
        # directions track the route so the center lands where the next
        # split needs it, avoiding QR moves in between.
        route = list(range(site_b - 1, site_a, -1))
        for left_site in route:
            self._apply_adjacent(left_site, _SWAP, fold="left")
        self._apply_adjacent(site_a, matrix, fold="right")
        for left_site in reversed(route):
            self._apply_adjacent(left_site, _SWAP, fold="right")

    def _apply_adjacent(self, site: int, matrix: np.ndarray,
                        fold: str = "right") -> None:
        """Gate on (site, site+1): contract, split by SVD, keep canon form.

        fold picks which side absorbs the singular values, i.e. where
        the orthogonality center ends up (site for "left", site + 1 for
        "right").
        """
        if self.center not in (site, site + 1):
            self.orthogonalize(site)
        a, b = self.tensors[site - 1], self.tensors[site]
        left, right = a.shape[0], b.shape[2]
        theta = a.reshape(left * 2, -1) @ b.reshape(-1, 2 * right)
        theta = theta.reshape(left, 2, 2, right).transpose(1, 2, 0, 3)
        theta = (matrix @ theta.reshape(4, left * right)).reshape(
            2, 2, left, right).transpose(2, 0, 1, 3)
        u, s, vh, kept, _ = _split_spectrum(
            theta.reshape(left * 2, 2 * right), self.policy)
        if fold == "left":
            self.tensors[site - 1] = (u * s).reshape(left, 2, kept)
            self.tensors[site] = vh.reshape(kept, 2, right)
            self.center = site
        else:
            self.tensors[site - 1] = u.reshape(left, 2, kept)
            self.tensors[site] = (s[:, None] * vh).reshape(kept, 2, right)
            self.center = site + 1

    # -- Schmidt spectra --------------------------------------------------

    def bond_spectrum(self, bond: int) -> np.ndarray:
        """Schmidt coefficients across internal bond ``bond`` (1..N-1).

        Nonincreasing nonnegative reals whose squares sum to the squared
        state norm.
        """
        if not 1 <= bond <= self.n_qubits - 1:
            raise ValueError(f"bond {bond} out of range 1..{self.n_qubits - 1}")
        self.orthogonalize(bond)
        t = self.tensors[bond - 1]
        left, phys, right = t.shape
        return _stable_svd(t.reshape(left * phys, right),
                           compute_uv=False)

    def schmidt_sweep(self) -> list[np.ndarray]:
        """All N-1 bond spectra from one left-to-right SVD sweep.

        Equivalent to calling bond_spectrum on every bond but with a
        single pass; only the gauge changes, never the amplitudes.
        """
        self.orthogonalize(1)
        spectra = []
        for i in range(self.n_qubits - 1):
            t = self.tensors[i]
            left, phys, right = t.shape
            u, s, vh = _stable_svd(t.reshape(left * phys, right))
            spectra.append(s)
            self.tensors[i] = u.reshape(left, phys, -1)
            self.tensors[i + 1] = np.tensordot(s[:, None] * vh,
                                               self.tensors[i + 1],
                                               axes=([1], [0]))
            self.center = i + 2
        return spectra
