/**
 * QAOA MaxCut demo driven entirely through the shared-library boundary.
 *
 * The client owns the cheap classical pieces: the 3-regular problem
 * graph, the angle bookkeeping, and a derivative-free optimizer. Every
 * quantum-state operation crosses the boundary: state preparation is a
 * fresh initialize, gates go through the three gate entry points, and
 * the cost is assembled from qvm_expectation_zz one edge at a time.
 */

import { Edge, randomRegularGraph } from "./graph.js";
import { loadLibrary, NativeLib } from "./native.js";
import { nelderMead } from "./optimizer.js";
import { Rng } from "./random.js";
import { QvmSession } from "./session.js";

/**
 * Result object in the buffer style: scalar diagnostics are looked up
 * by key via getInformation.
 */
export class ClientBuffer {
  readonly energy: number;
  readonly bestParams: number[];
  private readonly info: Map<string, number>;

  constructor(
    energy: number,
    bestParams: number[],
    info: Map<string, number>
  ) {
    this.energy = energy;
    this.bestParams = [...bestParams];
    this.info = new Map(info);
  }

  getInformation(key: string): number {
    const value = this.info.get(key);
    if (value === undefined) {
      const known = [...this.info.keys()].sort().join(", ");
      throw new Error(`no information "${key}" (have: ${known})`);
    }
    return value;
  }

  keys(): string[] {
    return [...this.info.keys()].sort();
  }
}

export interface DemoOptions {
  /** Reuse an already-loaded library instead of discovering one. */
  lib?: NativeLib;
  /** Optimizer restarts from fresh random angles (default 4). */
  restarts?: number;
  /** Objective-evaluation cap per restart (default 2000). */
  maxEvalsPerRestart?: number;
  /**
   * Fixed angles [beta_1..beta_p, gamma_1..gamma_p]: evaluate this
   * single point and skip optimization entirely.
   */
  angles?: number[];
}

/** Cut weight crossing the boundary per edge, from <Z_a Z_b>. */
function measureEnergy(session: QvmSession, edges: Edge[]): number {
  let cut = 0.0;
  for (const edge of edges) {
    cut += 0.5 * (1.0 - session.expectationZZ(edge.a, edge.b));
  }
  return -cut;
}

/**
 * Prepare the depth-p QAOA state for `angles` laid out as
 * [beta_1..beta_p, gamma_1..gamma_p]: a wall of H, then per layer a
 * Rzz(2*gamma) per edge and a Rx(2*beta) per qubit.
 */
function prepareState(
  session: QvmSession,
  nQubits: number,
  maxBond: number,
  edges: Edge[],
  angles: number[]
): void {
  const depth = angles.length / 2;
  session.reset(nQubits, maxBond);
  for (let q = 1; q <= nQubits; q += 1) {
    session.applyGate(q, "H");
  }
  for (let layer = 0; layer < depth; layer += 1) {
    const beta = angles[layer];
    const gamma = angles[depth + layer];
    for (const edge of edges) {
      session.applyTwoQubit(edge.a, edge.b, "Rzz", 2.0 * gamma);
    }
    for (let q = 1; q <= nQubits; q += 1) {
      session.applyRotation(q, "Rx", 2.0 * beta);
    }
  }
}

/**
 * Generate a 3-regular MaxCut instance from `seed`, minimize the QAOA
 * energy across the boundary, and return the incumbent with entropy
 * diagnostics read back from the final state.
 */
export function runQaoaDemo(
  nQubits: number,
  depth: number,
  maxBond: number,
  seed: number,
  options: DemoOptions = {}
): ClientBuffer {
  if (depth < 1) {
    throw new Error("depth must be >= 1");
  }
  const lib = options.lib ?? loadLibrary();
  const session = new QvmSession(lib);
  const rng = new Rng(seed);
  const edges = randomRegularGraph(nQubits, 3, rng);

  const objective = (angles: number[]): number => {
    prepareState(session, nQubits, maxBond, edges, angles);
    return measureEnergy(session, edges);
  };

  let bestX: number[];
  let bestValue: number;
  if (options.angles !== undefined) {
    if (options.angles.length !== 2 * depth) {
      throw new Error(
        `need ${2 * depth} angles for depth ${depth}, ` +
          `got ${options.angles.length}`
      );
    }
    bestX = [...options.angles];
    bestValue = objective(bestX);
  } else {
    const restarts = options.restarts ?? 4;
    const maxEvals = options.maxEvalsPerRestart ?? 2000;
    bestX = [];
    bestValue = Number.POSITIVE_INFINITY;
    for (let restart = 0; restart < restarts; restart += 1) {
      const init: number[] = [];
      for (let i = 0; i < depth; i += 1) {
        init.push(rng.uniform(0.0, Math.PI));
      }
      for (let i = 0; i < depth; i += 1) {
        init.push(rng.uniform(0.0, 2.0 * Math.PI));
      }
      const result = nelderMead(objective, init, {
        maxEvals,
        initialStep: 0.5,
        fTol: 1e-13,
        xTol: 1e-9,
      });
      if (result.value < bestValue) {
        bestValue = result.value;
        bestX = result.x;
      }
    }
  }

  // Re-prepare the incumbent state and read its entropy diagnostics.
  prepareState(session, nQubits, maxBond, edges, bestX);
  const stats = session.entropyStats();
  const midpoint = session.midpointEntropy();
  session.finalize();

  const info = new Map<string, number>();
  info.set("avg-entropy", stats.mean);
  info.set("stddev-entropy", stats.stderr);
  info.set("midpoint-entropy", midpoint);
  info.set("edge-count", edges.length);
  return new ClientBuffer(bestValue, bestX, info);
}

/**
 * One CSV row for a demo run, in the same column schema the simulator
 * CLI uses for its MaxCut ensembles. A demo run is a single graph, so
 * the two standard-error columns are exactly 0.
 */
export function demoCsv(
  buffer: ClientBuffer,
  nQubits: number,
  depth: number,
  maxBond: number
): string {
  const header =
    "N,p,chi,mean_energy,stderr_energy,mean_midpoint_entropy," +
    "stderr_entropy,avg_entropy,stddev_entropy";
  const row = [
    nQubits,
    depth,
    maxBond,
    buffer.energy,
    0.0,
    buffer.getInformation("midpoint-entropy"),
    0.0,
    buffer.getInformation("avg-entropy"),
    buffer.getInformation("stddev-entropy"),
  ];
  return `${header}\n${row.map(String).join(",")}\n`;
}
