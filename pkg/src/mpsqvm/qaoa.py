"""MaxCut QAOA on random 3-regular graphs, with ensemble statistics.

Conventions fixed here and relied on everywhere downstream:

- Energy is the negated expected cut weight, E = -cut, so lower is
  better and the reported minima are negative.
- The problem layer applies Rzz(2 * gamma_l * w_ij) per edge, i.e.
  exp(-i gamma_l w_ij Z_i Z_j).  This is a fixed reparameterization of
  the cut-Hamiltonian evolution (they differ by a global phase and a
  rescaling of gamma) and leaves optimized energies unchanged; the
  gamma range [0, 2*pi) covers the full period.
- Edges inside a layer are applied in lexicographic (i, j) order.  The
  terms commute exactly, but truncation makes order weakly relevant,
  so a fixed order guarantees determinism.
- Initial angles are drawn uniformly, beta in [0, pi) and gamma in
  [0, 2*pi).
- The evaluation budget caps objective evaluations (not internal
  optimizer iterations).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.optimize

from . import dense
from .circuits import CircuitOp, run_dense, run_mps
from .entropy import entropy_mean_stderr, midpoint_entropy, sample_stats
from .gates import GateSpec
from .mps import MpsState
from .observables import IsingCost, cost_expectation
from .tensor import TruncationPolicy

# -- graphs ----------------------------------------------------------------


@dataclass(frozen=True)
class RegularGraph:
    """Simple d-regular graph on 1-based vertices 1..n_nodes."""

    n_nodes: int
    edges: tuple[tuple[int, int], ...]
    degree: int = 3

    def __post_init__(self):
        counts = {v: 0 for v in range(1, self.n_nodes + 1)}
        seen = set()
        for i, j in self.edges:
            if not (1 <= i < j <= self.n_nodes):
                raise ValueError(f"edge ({i}, {j}) must satisfy 1 <= i < j <= n")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            counts[i] += 1
            counts[j] += 1
        bad = {v: c for v, c in counts.items() if c != self.degree}
        if bad:
            raise ValueError(f"vertices with degree != {self.degree}: {bad}")

    def is_connected(self) -> bool:
        adjacency = {v: [] for v in range(1, self.n_nodes + 1)}
        for i, j in self.edges:
            adjacency[i].append(j)
            adjacency[j].append(i)
        seen = {1}
        stack = [1]
        while stack:
            for neighbor in adjacency[stack.pop()]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    stack.append(neighbor)
        return len(seen) == self.n_nodes


def random_regular_graph(n_nodes: int, degree: int = 3,
                         seed=None) -> RegularGraph:
    """Uniform-flavored random d-regular graph by stub pairing.

    All d*n stubs are shuffled and paired; any sample containing a
    self-loop or repeated edge is rejected whole and redrawn, so
    accepted samples are exactly the simple pairings.  Deterministic
    for a given seed (or Generator state).
    """
    if n_nodes <= degree:
        raise ValueError("need n_nodes > degree")
    if (n_nodes * degree) % 2 != 0:
        raise ValueError("degree sum must be even")
    rng = seed if isinstance(seed, np.random.Generator) \
        else np.random.default_rng(seed)
    stubs = np.repeat(np.arange(1, n_nodes + 1), degree)
    for _ in range(100000):
        shuffled = rng.permutation(stubs)
        pairs = shuffled.reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        edges = {(int(min(a, b)), int(max(a, b))) for a, b in pairs}
        if len(edges) < pairs.shape[0]:
            continue
        return RegularGraph(n_nodes, tuple(sorted(edges)), degree)
    raise RuntimeError("pairing rejection did not terminate")


def cost_from_graph(graph: RegularGraph) -> IsingCost:
    """Unit-weight cut Hamiltonian for a graph."""
    return IsingCost(graph.n_nodes,
                     tuple((i, j, 1.0) for i, j in sorted(graph.edges)))


# -- parameters and circuit -------------------------------------------------


@dataclass(frozen=True)
class QaoaParams:
    """Angle schedule: one (beta, gamma) pair per layer."""

    betas: tuple[float, ...]
    gammas: tuple[float, ...]

    def __post_init__(self):
        if len(self.betas) != len(self.gammas):
            raise ValueError("betas and gammas must have equal length")
        if len(self.betas) < 1:
            raise ValueError("depth must be >= 1")

    @property
    def depth(self) -> int:
        return len(self.betas)

    def to_vector(self) -> np.ndarray:
        return np.array(self.betas + self.gammas, dtype=float)

    @classmethod
    def from_vector(cls, vector) -> "QaoaParams":
        vector = np.asarray(vector, dtype=float).ravel()
        if vector.size % 2 != 0 or vector.size < 2:
            raise ValueError("parameter vector length must be even, >= 2")
        depth = vector.size // 2
        return cls(tuple(vector[:depth]), tuple(vector[depth:]))

    @classmethod
    def random(cls, depth: int, rng: np.random.Generator) -> "QaoaParams":
        if depth < 1:
            raise ValueError("depth must be >= 1")
        betas = tuple(rng.uniform(0.0, np.pi, depth))
        gammas = tuple(rng.uniform(0.0, 2.0 * np.pi, depth))
        return cls(betas, gammas)


def build_qaoa_circuit(cost_or_graph, params: QaoaParams) -> list[CircuitOp]:
    """H wall, then per layer: Rzz(2*gamma*w) per edge, Rx(2*beta) per qubit."""
    cost = cost_or_graph if isinstance(cost_or_graph, IsingCost) \
        else cost_from_graph(cost_or_graph)
    ops = [CircuitOp(GateSpec("H"), (q,)) for q in range(1, cost.n_qubits + 1)]
    for beta, gamma in zip(params.betas, params.gammas):
        for i, j, w in sorted(cost.edges):
            ops.append(CircuitOp(GateSpec("Rzz", 2.0 * gamma * w), (i, j)))
        for q in range(1, cost.n_qubits + 1):
            ops.append(CircuitOp(GateSpec("Rx", 2.0 * beta), (q,)))
    return ops


def qaoa_state(graph: RegularGraph, params: QaoaParams, chi: int,
               cutoff: float = 0.0) -> MpsState:
    """Final MPS of the circuit at bond cap chi."""
    policy = TruncationPolicy(max_bond=chi, cutoff=cutoff)
    state = MpsState.computational_zero(graph.n_nodes, policy)
    return run_mps(state, build_qaoa_circuit(graph, params))


def qaoa_cost(graph: RegularGraph, params: QaoaParams, chi: int,
              cutoff: float = 0.0) -> tuple[float, float]:
    """(energy, midpoint entropy) of the simulated circuit.

    energy = -(expected cut weight), bounded by [-total_weight, 0].
    """
    state = qaoa_state(graph, params, chi, cutoff)
    energy = -cost_expectation(state, cost_from_graph(graph))
    return energy, midpoint_entropy(state)


def qaoa_cost_dense(graph: RegularGraph, params: QaoaParams) -> float:
    """Energy by the exact dense-statevector route (no MPS involved)."""
    vec = run_dense(dense.zero_state(graph.n_nodes),
                    build_qaoa_circuit(graph, params))
    cut = 0.0
    for i, j, w in cost_from_graph(graph).edges:
        cut += 0.5 * w * (1.0 - dense.pauli_expectation(vec, {i: "Z", j: "Z"}))
    return -cut


# -- optimization -----------------------------------------------------------


@dataclass(frozen=True)
class OptimizerConfig:
    """Derivative-free minimizer settings.

    max_evals caps objective evaluations.  initial_step and stop_tol
    are the initial and final trust-region radii.  The default stop_tol
    targets ensemble statistics: 1e-3 in angle space resolves energies
    far below ensemble standard errors.
    """

    max_evals: int = 1000
    initial_step: float = 0.5
    stop_tol: float = 1e-3
    seed: int | None = None

    def __post_init__(self):
        if self.max_evals < 1:
            raise ValueError("max_evals must be >= 1")


class _BudgetExhausted(Exception):
    pass


def optimize(objective: Callable[[np.ndarray], float],
             config: OptimizerConfig,
             init) -> tuple[np.ndarray, float, int]:
    """Linear-approximation trust-region minimization with an eval cap.

    Returns (best_x, best_value, eval_count) where best is the best
    point ever evaluated, never worse than the initial one.  A
    non-finite objective value aborts with a diagnostic.
    """
    x0 = np.asarray(init, dtype=float).ravel()
    tracker = {"x": x0.copy(), "value": math.inf, "count": 0}

    def wrapped(x):
        if tracker["count"] >= config.max_evals:
            raise _BudgetExhausted
        tracker["count"] += 1
        value = float(objective(np.asarray(x, dtype=float)))
        if not math.isfinite(value):
            raise ValueError(
                f"objective returned non-finite value {value!r} at {x!r}")
        if value < tracker["value"]:
            tracker["value"] = value
            tracker["x"] = np.array(x, dtype=float)
        return value

    try:
        scipy.optimize.minimize(
            wrapped, x0, method="COBYLA", tol=config.stop_tol,
            options={"rhobeg": config.initial_step,
                     "maxiter": config.max_evals})
    except _BudgetExhausted:
        pass
    return tracker["x"], tracker["value"], tracker["count"]


# -- ensembles and scaling --------------------------------------------------


@dataclass(frozen=True)
class GraphResult:
    graph_id: int
    graph: RegularGraph
    connected: bool
    best_energy: float
    best_params: QaoaParams
    eval_count: int
    midpoint_entropy_trace: tuple[float, ...]
    final_midpoint_entropy: float
    final_avg_entropy: float
    final_stddev_entropy: float


@dataclass(frozen=True)
class EnsembleResult:
    n_qubits: int
    depth: int
    chi: int
    cutoff: float
    seed: int
    per_graph: tuple[GraphResult, ...]
    mean_energy: float
    stderr_energy: float
    mean_midpoint_entropy: float
    stderr_midpoint_entropy: float
    mean_avg_entropy: float
    mean_stddev_entropy: float


@dataclass(frozen=True)
class ScalingRecord:
    n_qubits: int
    chi: int
    s_over_n: float
    lnchi_over_n: float
    e_min: float
    e_opt: float
    ratio: float


def run_ensemble(n_qubits: int, depth: int, chi: int, n_graphs: int = 25,
                 seed: int = 0, cutoff: float = 0.0,
                 config: OptimizerConfig | None = None) -> EnsembleResult:
    """Optimize QAOA over an ensemble of random 3-regular graphs.

    Graph g's topology and initial angles derive from (seed, g) only,
    never from chi or depth, so runs at different bond caps see
    identical ensembles and identical starting points.
    """
    if n_qubits % 2 != 0 or n_qubits < 4:
        raise ValueError("n_qubits must be even and >= 4")
    if config is None:
        config = OptimizerConfig()
    per_graph = []
    for graph_id in range(n_graphs):
        rng = np.random.default_rng([seed, graph_id])
        graph = random_regular_graph(n_qubits, 3, rng)
        init = QaoaParams.random(depth, rng)
        trace = []

        def objective(x, graph=graph, trace=trace):
            energy, mid = qaoa_cost(graph, QaoaParams.from_vector(x), chi,
                                    cutoff)
            trace.append(mid)
            return energy

        best_x, best_value, count = optimize(objective, config,
                                             init.to_vector())
        best_params = QaoaParams.from_vector(best_x)
        final_state = qaoa_state(graph, best_params, chi, cutoff)
        final_mid = midpoint_entropy(final_state)
        bond_stats = entropy_mean_stderr(final_state)
        per_graph.append(GraphResult(
            graph_id=graph_id,
            graph=graph,
            connected=graph.is_connected(),
            best_energy=best_value,
            best_params=best_params,
            eval_count=count,
            midpoint_entropy_trace=tuple(trace),
            final_midpoint_entropy=final_mid,
            final_avg_entropy=bond_stats.mean,
            final_stddev_entropy=bond_stats.stderr,
        ))
    energy_stats = sample_stats([g.best_energy for g in per_graph])
    mid_stats = sample_stats([g.final_midpoint_entropy for g in per_graph])
    return EnsembleResult(
        n_qubits=n_qubits, depth=depth, chi=chi, cutoff=cutoff, seed=seed,
        per_graph=tuple(per_graph),
        mean_energy=energy_stats.mean, stderr_energy=energy_stats.stderr,
        mean_midpoint_entropy=mid_stats.mean,
        stderr_midpoint_entropy=mid_stats.stderr,
        mean_avg_entropy=float(np.mean([g.final_avg_entropy
                                        for g in per_graph])),
        mean_stddev_entropy=float(np.mean([g.final_stddev_entropy
                                           for g in per_graph])),
    )


def scaling_sweep(n_list, chi_list, depth: int = 1, n_graphs: int = 25,
                  seed: int = 0, cutoff: float = 0.0,
                  config: OptimizerConfig | None = None) -> list[ScalingRecord]:
    """Collapse coordinates (ln chi / N, S/N) and (ln chi / N, E_min/E_opt).

    E_opt for each N is the lowest mean energy over the chi sweep, so
    the record attaining it has ratio exactly 1.
    """
    for chi in chi_list:
        if chi < 2:
            raise ValueError("scaling sweep requires chi >= 2")
    records = []
    for n in n_list:
        results = [run_ensemble(n, depth, chi, n_graphs, seed, cutoff, config)
                   for chi in chi_list]
        e_opt = min(r.mean_energy for r in results)
        for chi, result in zip(chi_list, results):
            ratio = result.mean_energy / e_opt if e_opt != 0.0 else math.nan
            records.append(ScalingRecord(
                n_qubits=n, chi=chi,
                s_over_n=result.mean_midpoint_entropy / n,
                lnchi_over_n=math.log(chi) / n,
                e_min=result.mean_energy, e_opt=e_opt, ratio=ratio))
    return records
