"""Entanglement entropy diagnostics and the random-state baseline curve.

All entropies are in nats.  Bond k of an N-qubit chain is the
bipartition with N_A = k sites on the left; profile entries are indexed
by bond.  The analytical baseline for Haar-random pure states is

    S(n_a, n_b) = sum_{k = 2^n_b + 1}^{2^n} 1/k  -  (2^n_a - 1) / 2^(n_b + 1)

with n = n_a + n_b and n_a <= n_b, evaluated with exact compensated
summation (no asymptotic approximation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gates import HaarSampler
from .mps import MpsState
from .tensor import TruncationPolicy


@dataclass(frozen=True)
class EntropyProfile:
    """Entropy at every internal bond, left to right (N-1 entries)."""

    per_bond: tuple[float, ...]

    @property
    def midpoint(self) -> float:
        n_qubits = len(self.per_bond) + 1
        return self.per_bond[n_qubits // 2 - 1]


@dataclass(frozen=True)
class SampleStats:
    """Mean and standard error of the mean over n_samples values.

    stderr uses the Bessel-corrected sample deviation and is 0 when
    n_samples is 1.
    """

    mean: float
    stderr: float
    n_samples: int


@dataclass(frozen=True)
class FidelityRecord:
    n_qubits: int
    chi: int
    f_sim: float


def sample_stats(values) -> SampleStats:
    values = np.asarray(values, dtype=float)
    if values.size < 1:
        raise ValueError("need at least one sample")
    mean = float(np.mean(values))
    if values.size == 1:
        return SampleStats(mean, 0.0, 1)
    stderr = float(np.std(values, ddof=1) / math.sqrt(values.size))
    return SampleStats(mean, stderr, int(values.size))


def entropy_from_spectrum(spectrum: np.ndarray) -> float:
    """Von Neumann entropy -sum s^2 ln s^2 with 0 ln 0 = 0."""
    squared = np.asarray(spectrum, dtype=float) ** 2
    squared = squared[squared > 0.0]
    if squared.size == 0:
        return 0.0
    # exact value is >= 0; roundoff near a pure spectrum can dip below
    return max(0.0, float(-np.sum(squared * np.log(squared))))


def entropy_at_bond(state: MpsState, bond: int) -> float:
    return entropy_from_spectrum(state.bond_spectrum(bond))


def entropy_profile(state: MpsState) -> EntropyProfile:
    """All bond entropies from a single sweep."""
    spectra = state.schmidt_sweep()
    return EntropyProfile(tuple(entropy_from_spectrum(s) for s in spectra))


def midpoint_entropy(state: MpsState) -> float:
    """Entropy at the floor(N/2) bond."""
    if state.n_qubits < 2:
        raise ValueError("midpoint entropy needs at least 2 qubits")
    return entropy_at_bond(state, state.n_qubits // 2)


def entropy_mean_stderr(state: MpsState, bonds=None) -> SampleStats:
    """Mean and standard error of bond entropies over a bond set.

    Default set is every internal bond 1..N-1.
    """
    if bonds is None:
        bonds = range(1, state.n_qubits)
    bonds = sorted(set(bonds))
    if not bonds:
        raise ValueError("bond set must be nonempty")
    for bond in bonds:
        if not 1 <= bond <= state.n_qubits - 1:
            raise ValueError(f"bond {bond} out of range 1..{state.n_qubits - 1}")
    profile = entropy_profile(state)
    return sample_stats([profile.per_bond[b - 1] for b in bonds])


def page_entropy(n_a: int, n_b: int) -> float:
    """Average entropy of the smaller part of a random bipartite pure state."""
    if n_a < 0 or n_a > n_b:
        raise ValueError("require 0 <= n_a <= n_b (pass the smaller side first)")
    if n_a == 0:
        return 0.0
    d_a, d_b = 2**n_a, 2**n_b
    harmonic = math.fsum(1.0 / k for k in range(d_b + 1, d_a * d_b + 1))
    return harmonic - (d_a - 1) / (2.0 * d_b)


def simulation_fidelity(s_mid: float, n_qubits: int) -> float:
    """Midpoint entropy divided by the random-state baseline at N/2."""
    if n_qubits % 2 != 0:
        raise ValueError("fidelity is defined for even qubit counts")
    if s_mid < 0:
        raise ValueError("entropy must be nonnegative")
    half = n_qubits // 2
    return s_mid / page_entropy(half, half)


def page_experiment(n_qubits: int, chi: int, m_samples: int, seed: int,
                    cutoff: float = 0.0,
                    cap: int = 20) -> tuple[list[SampleStats], FidelityRecord]:
    """Monte Carlo entropy profile of Haar-random states at bond cap chi.

    Each sample is drawn as a dense Haar vector, compressed to an MPS
    under the policy, and profiled.  Returns per-bond stats plus the
    fidelity computed from the midpoint mean.
    """
    if n_qubits % 2 != 0:
        raise ValueError("even qubit count required")
    if n_qubits > cap:
        raise ValueError(f"n_qubits={n_qubits} exceeds cap={cap}")
    if m_samples < 1:
        raise ValueError("m_samples must be >= 1")
    policy = TruncationPolicy(max_bond=chi, cutoff=cutoff)
    sampler = HaarSampler(seed, n_qubits)
    profiles = np.empty((m_samples, n_qubits - 1))
    for m in range(m_samples):
        state = MpsState.from_statevector(sampler.sample_state(), policy)
        profiles[m] = entropy_profile(state).per_bond
    per_bond = [sample_stats(profiles[:, b]) for b in range(n_qubits - 1)]
    midpoint_mean = per_bond[n_qubits // 2 - 1].mean
    record = FidelityRecord(n_qubits, chi,
                            simulation_fidelity(midpoint_mean, n_qubits))
    return per_bond, record
