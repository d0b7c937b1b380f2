"""Entropy diagnostics, analytic Haar-average curve, and fidelity metric."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import build_bell_plus_zero
from mpsqvm.entropy import (EntropyProfile, FidelityRecord, SampleStats,
                            entropy_at_bond, entropy_from_spectrum,
                            entropy_mean_stderr, entropy_profile,
                            midpoint_entropy, page_entropy, page_experiment,
                            sample_stats, simulation_fidelity)
from mpsqvm.gates import GateSpec, gate_matrix
from mpsqvm.mps import MpsState
from mpsqvm.tensor import TruncationPolicy
from oracles import (PAGE_SPOT_VALUES, haar_state_oracle, page_entropy_exact,
                     partial_trace_entropy)

H = gate_matrix(GateSpec("H"))
CNOT = gate_matrix(GateSpec("CNOT"))

LN2 = math.log(2.0)


def ghz(n_qubits: int) -> MpsState:
    state = MpsState.computational_zero(n_qubits, TruncationPolicy(4))
    state.apply_one_qubit(1, H)
    for site in range(1, n_qubits):
        state.apply_two_qubit(site, site + 1, CNOT)
    return state


class TestEntropyFromSpectrum:
    def test_pure_spectrum_is_zero(self):
        assert entropy_from_spectrum(np.array([1.0])) == 0.0

    def test_maximally_mixed_pair(self):
        s = np.array([1.0, 1.0]) / np.sqrt(2.0)
        assert abs(entropy_from_spectrum(s) - LN2) < 1e-12

    def test_never_negative_near_pure(self):
        s = np.array([1.0 - 1e-16, 1e-16])
        assert entropy_from_spectrum(s) >= 0.0


class TestEntropyAtBond:
    def test_bell_bond_one(self):
        state = build_bell_plus_zero()
        assert abs(entropy_at_bond(state, 1) - LN2) < 1e-12

    def test_product_state_all_bonds(self):
        state = MpsState.computational_zero(5, TruncationPolicy(4))
        for bond in range(1, 5):
            assert abs(entropy_at_bond(state, bond)) < 1e-12

    def test_haar_state_matches_partial_trace_oracle(self):
        vec = haar_state_oracle(256, np.random.default_rng(12))
        state = MpsState.from_statevector(vec, TruncationPolicy(16))
        got = entropy_at_bond(state, 4)
        assert abs(got - partial_trace_entropy(vec, 4, 8)) < 1e-8

    def test_gauge_invariance(self):
        vec = haar_state_oracle(64, np.random.default_rng(13))
        state = MpsState.from_statevector(vec, TruncationPolicy(8))
        reference = entropy_at_bond(state, 3)
        for site in (1, 6, 2):
            state.orthogonalize(site)
            assert abs(entropy_at_bond(state, 3) - reference) < 1e-10

    def test_rejects_bad_bond(self):
        state = MpsState.computational_zero(3, TruncationPolicy(2))
        with pytest.raises(ValueError):
            entropy_at_bond(state, 3)


class TestMidpointEntropy:
    def test_fresh_state_is_zero(self):
        state = MpsState.computational_zero(8, TruncationPolicy(2))
        assert abs(midpoint_entropy(state)) < 1e-12

    def test_ghz_is_ln_two(self):
        assert abs(midpoint_entropy(ghz(8)) - LN2) < 1e-12

    def test_rejects_single_qubit(self):
        state = MpsState.computational_zero(1, TruncationPolicy(1))
        with pytest.raises(ValueError):
            midpoint_entropy(state)


class TestEntropyMeanStderr:
    def test_product_state(self):
        state = MpsState.computational_zero(6, TruncationPolicy(2))
        stats = entropy_mean_stderr(state)
        assert stats.mean == 0.0 and stats.stderr == 0.0
        assert stats.n_samples == 5

    def test_ghz_all_bonds(self):
        stats = entropy_mean_stderr(ghz(6))
        assert abs(stats.mean - LN2) < 1e-12
        assert stats.stderr < 1e-12

    def test_bell_times_zero_hand_value(self):
        # bonds carry entropies (ln 2, 0): mean ln2/2, stderr ln2/2
        stats = entropy_mean_stderr(build_bell_plus_zero(), bonds=(1, 2))
        assert abs(stats.mean - LN2 / 2) < 1e-12
        assert abs(stats.stderr - LN2 / 2) < 1e-12

    def test_rejects_empty_bond_set(self):
        with pytest.raises(ValueError):
            entropy_mean_stderr(build_bell_plus_zero(), bonds=())


class TestSampleStats:
    def test_single_sample_has_zero_stderr(self):
        stats = sample_stats([4.2])
        assert stats == SampleStats(4.2, 0.0, 1)

    def test_stderr_formula(self):
        values = [1.0, 2.0, 3.0, 4.0]
        stats = sample_stats(values)
        want = np.std(values, ddof=1) / 2.0
        assert abs(stats.stderr - want) < 1e-12
        assert stats.mean == 2.5


class TestPageEntropy:
    def test_empty_subsystem(self):
        assert page_entropy(0, 5) == 0.0

    def test_one_one(self):
        assert abs(page_entropy(1, 1) - 1.0 / 3.0) < 1e-15

    def test_spot_values_from_exact_rationals(self):
        for (n_a, n_b), want in PAGE_SPOT_VALUES.items():
            assert abs(page_entropy(n_a, n_b) - want) < 1e-12, (n_a, n_b)

    def test_matches_fraction_oracle_over_range(self):
        for n_a in range(0, 7):
            for n_b in range(n_a, 7):
                want = float(page_entropy_exact(n_a, n_b))
                assert abs(page_entropy(n_a, n_b) - want) < 1e-12

    def test_rejects_unordered_arguments(self):
        with pytest.raises(ValueError):
            page_entropy(3, 2)

    def test_strictly_increasing_in_subsystem_size(self):
        for n_b in range(1, 8):
            values = [page_entropy(n_a, n_b) for n_a in range(1, n_b + 1)]
            assert all(b > a for a, b in zip(values, values[1:]))

    def test_bounded_by_max_entropy(self):
        for n_a in range(1, 8):
            assert page_entropy(n_a, n_a) < n_a * LN2


class TestSimulationFidelity:
    def test_page_value_gives_unity(self):
        assert abs(simulation_fidelity(page_entropy(6, 6), 12) - 1.0) < 1e-12

    def test_zero_entropy_gives_zero(self):
        assert simulation_fidelity(0.0, 8) == 0.0

    def test_rejects_odd_qubit_count(self):
        with pytest.raises(ValueError, match="even"):
            simulation_fidelity(1.0, 7)


class TestEntropyProfile:
    def test_profile_matches_bond_entropies(self):
        state = ghz(6)
        profile = entropy_profile(state)
        assert isinstance(profile, EntropyProfile)
        assert len(profile.per_bond) == 5
        for bond, value in enumerate(profile.per_bond, start=1):
            assert abs(value - entropy_at_bond(state, bond)) < 1e-10

    def test_midpoint_property(self):
        profile = entropy_profile(ghz(8))
        assert profile.midpoint == profile.per_bond[3]


class TestPageExperiment:
    def test_deterministic_and_structured(self):
        a = page_experiment(6, 8, m_samples=4, seed=5)
        b = page_experiment(6, 8, m_samples=4, seed=5)
        per_bond_a, record_a = a
        per_bond_b, record_b = b
        assert len(per_bond_a) == 5
        assert all(x == y for x, y in zip(per_bond_a, per_bond_b))
        assert record_a == record_b
        assert isinstance(record_a, FidelityRecord)
        assert record_a.chi == 8 and record_a.n_qubits == 6

    def test_exact_chi_reaches_unit_fidelity(self):
        _, record = page_experiment(8, 16, m_samples=8, seed=7)
        assert abs(record.f_sim - 1.0) < 0.05

    def test_truncation_lowers_fidelity(self):
        _, exact = page_experiment(8, 16, m_samples=5, seed=9)
        _, truncated = page_experiment(8, 4, m_samples=5, seed=9)
        assert truncated.f_sim < exact.f_sim

    def test_rejects_odd_qubit_count(self):
        with pytest.raises(ValueError, match="even"):
            page_experiment(7, 8, m_samples=2, seed=0)


class TestEntropyInvariantProperties:
    @settings(deadline=None, max_examples=30)
    @given(seed=st.integers(0, 2**31), chi=st.sampled_from([2, 3, 4, 8]))
    def test_truncated_entropy_bounds(self, seed, chi):
        vec = haar_state_oracle(64, np.random.default_rng(seed))
        state = MpsState.from_statevector(vec, TruncationPolicy(chi))
        for bond in range(1, 6):
            s = entropy_at_bond(state, bond)
            assert s >= 0.0
            assert s <= math.log(chi) + 1e-9
            assert s <= min(bond, 6 - bond) * LN2 + 1e-9

    @settings(deadline=None, max_examples=20)
    @given(seed=st.integers(0, 2**31))
    def test_norm_preserved_after_truncation(self, seed):
        vec = haar_state_oracle(64, np.random.default_rng(seed))
        state = MpsState.from_statevector(vec, TruncationPolicy(3))
        assert abs(state.norm() - 1.0) < 1e-10
