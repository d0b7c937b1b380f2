/**
 * Client-side random regular graph generation by stub pairing.
 *
 * Vertices are 1-based. Each vertex contributes `degree` stubs; the
 * stub list is shuffled and paired off, and any sample containing a
 * self-loop or a repeated edge is rejected whole and redrawn, so the
 * accepted samples are exactly the simple pairings. For n = 4 and
 * degree 3 the only simple graph is K4, which makes 4-vertex runs
 * directly comparable across independently seeded components.
 */

import { Rng } from "./random.js";

export interface Edge {
  readonly a: number;
  readonly b: number;
}

const MAX_ATTEMPTS = 100000;

/** Edges sorted lexicographically, each with a < b. */
export function randomRegularGraph(
  nNodes: number,
  degree: number,
  rng: Rng
): Edge[] {
  if (nNodes <= degree) {
    throw new Error(`need nNodes > degree, got ${nNodes} <= ${degree}`);
  }
  if ((nNodes * degree) % 2 !== 0) {
    throw new Error("degree sum must be even");
  }
  const stubs: number[] = [];
  for (let v = 1; v <= nNodes; v += 1) {
    for (let k = 0; k < degree; k += 1) {
      stubs.push(v);
    }
  }
  for (let attempt = 0; attempt < MAX_ATTEMPTS; attempt += 1) {
    rng.shuffle(stubs);
    const edges: Edge[] = [];
    const seen = new Set<string>();
    let ok = true;
    for (let i = 0; i < stubs.length; i += 2) {
      const a = Math.min(stubs[i], stubs[i + 1]);
      const b = Math.max(stubs[i], stubs[i + 1]);
      const key = `${a},${b}`;
      if (a === b || seen.has(key)) {
        ok = false;
        break;
      }
      seen.add(key);
      edges.push({ a, b });
    }
    if (ok) {
      edges.sort((x, y) => (x.a - y.a) || (x.b - y.b));
      return edges;
    }
  }
  throw new Error("regular graph sampling did not converge");
}
