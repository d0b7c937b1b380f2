"""Matrix-product-state quantum circuit simulator.

Core pieces: truncated tensor decompositions (tensor), the MPS state
with gate application (mps), a named gate catalog and Haar sampling
(gates), circuits runnable on both the MPS and a dense reference
backend (circuits, dense), Pauli/MaxCut observables (observables),
entanglement diagnostics with the analytical random-state baseline
(entropy), QAOA ensembles and scaling sweeps (qaoa), a C-compatible
shared-library boundary (ffi), and a deterministic experiment CLI
(cli).
"""

from .circuits import CircuitOp, random_circuit, run_dense, run_mps
from .entropy import (
    EntropyProfile,
    FidelityRecord,
    SampleStats,
    entropy_at_bond,
    entropy_mean_stderr,
    entropy_profile,
    midpoint_entropy,
    page_entropy,
    page_experiment,
    sample_stats,
    simulation_fidelity,
)
from .gates import GateSpec, HaarSampler, gate_matrix, haar_unitary, sample_haar_state
from .mps import MpsState
from .observables import IsingCost, PauliTerm, cost_expectation, expectation
from .qaoa import (
    EnsembleResult,
    GraphResult,
    OptimizerConfig,
    QaoaParams,
    RegularGraph,
    ScalingRecord,
    build_qaoa_circuit,
    cost_from_graph,
    optimize,
    qaoa_cost,
    qaoa_cost_dense,
    qaoa_state,
    random_regular_graph,
    run_ensemble,
    scaling_sweep,
)
from .tensor import SvdResult, TruncationPolicy, contract, truncated_svd

__version__ = "0.1.0"

__all__ = [
    "CircuitOp",
    "EnsembleResult",
    "EntropyProfile",
    "FidelityRecord",
    "GateSpec",
    "GraphResult",
    "HaarSampler",
    "IsingCost",
    "MpsState",
    "OptimizerConfig",
    "PauliTerm",
    "QaoaParams",
    "RegularGraph",
    "SampleStats",
    "ScalingRecord",
    "SvdResult",
    "TruncationPolicy",
    "build_qaoa_circuit",
    "contract",
    "cost_expectation",
    "cost_from_graph",
    "entropy_at_bond",
    "entropy_mean_stderr",
    "entropy_profile",
    "expectation",
    "gate_matrix",
    "haar_unitary",
    "midpoint_entropy",
    "optimize",
    "page_entropy",
    "page_experiment",
    "qaoa_cost",
    "qaoa_cost_dense",
    "qaoa_state",
    "random_circuit",
    "random_regular_graph",
    "run_dense",
    "run_ensemble",
    "run_mps",
    "sample_haar_state",
    "sample_stats",
    "scaling_sweep",
    "simulation_fidelity",
    "truncated_svd",
]
