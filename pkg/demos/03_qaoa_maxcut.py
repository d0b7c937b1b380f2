"""MaxCut on 3-regular graphs, end to end.

One graph first: build the alternating circuit, optimize its angles,
and read the cut out of the energy.  Then a small ensemble at two bond
caps shows the cap starting to bite as depth grows and the optimized
state builds entanglement toward the small cap's ceiling.
"""

import numpy as np

from mpsqvm.qaoa import (OptimizerConfig, QaoaParams, cost_from_graph,
                         optimize, qaoa_cost, random_regular_graph,
                         run_ensemble)

# --- single instance -------------------------------------------------
graph = random_regular_graph(8, seed=3)
cost = cost_from_graph(graph)
print(f"graph: {graph.n_nodes} nodes, {len(graph.edges)} edges, "
      f"3-regular, connected = {graph.is_connected()}")

DEPTH = 2
CHI = 16
config = OptimizerConfig(max_evals=400, stop_tol=1e-4, seed=11)
rng = np.random.default_rng(11)


def objective(x):
    return qaoa_cost(graph, QaoaParams.from_vector(x), CHI)[0]


best_x, best_energy, evals = optimize(
    objective, config, QaoaParams.random(DEPTH, rng).to_vector())

# energy = -(expected cut weight), so the cut is just the sign flip
print(f"depth {DEPTH}, bond cap {CHI}: energy {best_energy:.4f} after "
      f"{evals} evaluations")
print(f"expected cut weight {-best_energy:.4f} of {cost.total_weight:.0f} "
      f"total edge weight")

# --- ensemble at two bond caps ---------------------------------------
# Graphs and starting angles depend only on (seed, graph index), so the
# two sweeps face identical problems and differ only in the cap.
print()
print(f"{'p':>2} {'chi':>4} {'mean energy':>12} {'stderr':>8} "
      f"{'midpoint S':>11}")
for depth in (1, 2):
    for chi in (4, 32):
        result = run_ensemble(8, depth, chi, n_graphs=6, seed=7,
                              config=OptimizerConfig(max_evals=200))
        print(f"{depth:>2} {chi:>4} {result.mean_energy:>12.4f} "
              f"{result.stderr_energy:>8.4f} "
              f"{result.mean_midpoint_entropy:>11.4f}")

print()
print(f"a cap of chi can hold at most ln(chi) nats per cut: "
      f"ln(4) = {np.log(4):.3f}, ln(32) = {np.log(32):.3f}")
print("at p = 1 both caps sit below their ceilings and land close "
      "together; by p = 2 the uncapped run wants more midpoint entropy "
      "than ln(4), so the chi = 4 energies start to trail")
