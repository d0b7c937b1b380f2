"""Gate catalog matrices, conventions, and Haar sampling statistics."""

from __future__ import annotations

import numpy as np
import pytest

from mpsqvm.gates import (GATE_NAMES, GateSpec, HaarSampler, UnknownGateError,
                          gate_matrix, haar_unitary, is_unitary,
                          sample_haar_state)
from oracles import partial_trace_entropy, PAGE_SPOT_VALUES


class TestGateMatrix:
    def test_hadamard_literal(self):
        want = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        np.testing.assert_allclose(gate_matrix(GateSpec("H")), want,
                                   atol=1e-15)

    def test_rx_pi_is_minus_i_x(self):
        want = -1j * np.array([[0, 1], [1, 0]])
        np.testing.assert_allclose(gate_matrix(GateSpec("Rx", np.pi)), want,
                                   atol=1e-15)

    def test_rz_half_angle_convention(self):
        theta = 0.7321
        want = np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])
        np.testing.assert_allclose(gate_matrix(GateSpec("Rz", theta)), want,
                                   atol=1e-15)

    def test_rzz_diagonal_sign_pattern(self):
        theta = 1.234
        lo, hi = np.exp(-0.5j * theta), np.exp(0.5j * theta)
        want = np.diag([lo, hi, hi, lo])
        np.testing.assert_allclose(gate_matrix(GateSpec("Rzz", theta)), want,
                                   atol=1e-15)

    def test_cnot_literal(self):
        want = np.array([[1, 0, 0, 0], [0, 1, 0, 0],
                         [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
        np.testing.assert_allclose(gate_matrix(GateSpec("CNOT")), want,
                                   atol=1e-15)

    def test_cx_is_cnot_alias(self):
        np.testing.assert_array_equal(gate_matrix(GateSpec("CX")),
                                      gate_matrix(GateSpec("CNOT")))
        assert GateSpec("CX").arity == 2

    def test_unknown_name_rejected(self):
        with pytest.raises(UnknownGateError, match="unknown gate"):
            gate_matrix(GateSpec("Q"))

    def test_missing_angle_rejected(self):
        with pytest.raises(ValueError, match="angle"):
            gate_matrix(GateSpec("Rx"))

    def test_superfluous_angle_rejected(self):
        with pytest.raises(ValueError, match="angle"):
            gate_matrix(GateSpec("H", 0.5))

    def test_every_cataloged_gate_is_unitary(self):
        for name in GATE_NAMES:
            spec = (GateSpec(name, 0.8311)
                    if name in ("Rx", "Ry", "Rz", "Rzz") else GateSpec(name))
            matrix = gate_matrix(spec)
            assert is_unitary(matrix, tol=1e-12), name
            want_shape = (2, 2) if spec.arity == 1 else (4, 4)
            assert matrix.shape == want_shape

    def test_arity_classification(self):
        assert GateSpec("H").arity == 1
        assert GateSpec("Rz", 1.0).arity == 1
        assert GateSpec("SWAP").arity == 2
        assert GateSpec("Rzz", 1.0).arity == 2


class TestIsUnitary:
    def test_accepts_identity(self):
        assert is_unitary(np.eye(4, dtype=complex))

    def test_rejects_projector(self):
        assert not is_unitary(np.diag([1.0, 0.0]).astype(complex))

    def test_rejects_non_square(self):
        assert not is_unitary(np.ones((2, 3), complex))


class TestHaarSampler:
    def test_samples_are_normalized(self):
        sampler = HaarSampler(seed=5, n_qubits=4)
        for _ in range(10):
            assert abs(np.linalg.norm(sampler.sample_state()) - 1.0) < 1e-12

    def test_same_seed_reproduces_stream(self):
        a = HaarSampler(seed=99, n_qubits=3)
        b = HaarSampler(seed=99, n_qubits=3)
        for _ in range(5):
            np.testing.assert_array_equal(a.sample_state(), b.sample_state())

    def test_different_seeds_differ(self):
        a = HaarSampler(seed=1, n_qubits=3).sample_state()
        b = HaarSampler(seed=2, n_qubits=3).sample_state()
        assert np.max(np.abs(a - b)) > 1e-3

    def test_rejects_dimension_below_two(self):
        with pytest.raises(ValueError):
            HaarSampler(seed=0, n_qubits=0)

    def test_first_moment_uniformity(self):
        # Mean squared amplitude over 200 samples at dimension 16 must sit
        # within 5 standard errors of 1/16 for every component.
        sampler = HaarSampler(seed=1234, n_qubits=4)
        probs = np.array([np.abs(sample_haar_state(sampler)) ** 2
                          for _ in range(200)])
        mean = probs.mean(axis=0)
        stderr = probs.std(axis=0, ddof=1) / np.sqrt(200)
        assert np.all(np.abs(mean - 1.0 / 16.0) <= 5.0 * stderr)

    def test_midpoint_entropy_matches_haar_average(self):
        # 30 samples at N = 12: the mean half-chain entropy of the raw
        # vectors must land within 3 standard errors of the analytic
        # Haar-average value for a 6|6 split.
        sampler = HaarSampler(seed=31, n_qubits=12)
        entropies = np.array([
            partial_trace_entropy(sampler.sample_state(), 6, 12)
            for _ in range(30)])
        stderr = entropies.std(ddof=1) / np.sqrt(30)
        assert abs(entropies.mean() - PAGE_SPOT_VALUES[(6, 6)]) <= 3 * stderr


class TestHaarUnitary:
    def test_unitarity(self):
        rng = np.random.default_rng(0)
        for dim in (2, 4, 8):
            u = haar_unitary(dim, rng)
            np.testing.assert_allclose(u @ u.conj().T, np.eye(dim),
                                       atol=1e-12)

    def test_deterministic_under_seed(self):
        a = haar_unitary(4, np.random.default_rng(7))
        b = haar_unitary(4, np.random.default_rng(7))
        np.testing.assert_array_equal(a, b)

    def test_phase_fix_leaves_positive_diagonal_r(self):
        # Q from the corrected decomposition satisfies Q = A R^{-1} with R
        # diagonal real positive; equivalently Q^dagger A has positive real
        # diagonal.  Draw A from the same stream to check the convention.
        u = haar_unitary(6, np.random.default_rng(11))
        rng = np.random.default_rng(11)
        a = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        r = u.conj().T @ a
        diag = np.diag(r)
        assert np.all(np.abs(diag.imag) < 1e-10)
        assert np.all(diag.real > 0)
