/**
 * Derivative-free minimization by the Nelder-Mead simplex method.
 *
 * Plain implementation with the standard reflection, expansion,
 * contraction, and shrink moves. The best point ever evaluated is
 * tracked separately from the simplex so the caller always gets the
 * true incumbent even if a shrink step discards it.
 */

export interface OptimizeOptions {
  maxEvals: number;
  initialStep: number;
  /** Stop when the simplex f-values agree this closely... */
  fTol: number;
  /** ...and its vertices agree this closely in every coordinate. */
  xTol: number;
}

export interface OptimizeResult {
  x: number[];
  value: number;
  evals: number;
}

type Objective = (x: number[]) => number;

export function nelderMead(
  f: Objective,
  x0: number[],
  options: OptimizeOptions
): OptimizeResult {
  const dim = x0.length;
  if (dim < 1) {
    throw new Error("need at least one coordinate");
  }
  let evals = 0;
  let bestX = [...x0];
  let bestValue = Number.POSITIVE_INFINITY;

  const evaluate = (x: number[]): number => {
    const value = f(x);
    evals += 1;
    if (value < bestValue) {
      bestValue = value;
      bestX = [...x];
    }
    return value;
  };

  // Initial simplex: x0 plus one step along each coordinate axis.
  const simplex: { x: number[]; value: number }[] = [
    { x: [...x0], value: evaluate(x0) },
  ];
  for (let i = 0; i < dim; i += 1) {
    const vertex = [...x0];
    vertex[i] += options.initialStep;
    simplex.push({ x: vertex, value: evaluate(vertex) });
  }

  const converged = (): boolean => {
    const fSpread = simplex[simplex.length - 1].value - simplex[0].value;
    if (fSpread > options.fTol) {
      return false;
    }
    for (let i = 0; i < dim; i += 1) {
      let low = simplex[0].x[i];
      let high = low;
      for (const vertex of simplex) {
        low = Math.min(low, vertex.x[i]);
        high = Math.max(high, vertex.x[i]);
      }
      if (high - low > options.xTol) {
        return false;
      }
    }
    return true;
  };

  while (evals < options.maxEvals) {
    simplex.sort((p, q) => p.value - q.value);
    if (converged()) {
      break;
    }
    const worst = simplex[dim];
    const centroid = new Array<number>(dim).fill(0);
    for (let i = 0; i < dim; i += 1) {
      for (let j = 0; j < dim; j += 1) {
        centroid[j] += simplex[i].x[j] / dim;
      }
    }
    const blend = (coeff: number): number[] =>
      centroid.map((c, j) => c + coeff * (worst.x[j] - c));

    const reflected = blend(-1.0);
    const fReflected = evaluate(reflected);
    if (fReflected < simplex[0].value) {
      const expanded = blend(-2.0);
      const fExpanded = evaluate(expanded);
      if (fExpanded < fReflected) {
        simplex[dim] = { x: expanded, value: fExpanded };
      } else {
        simplex[dim] = { x: reflected, value: fReflected };
      }
      continue;
    }
    if (fReflected < simplex[dim - 1].value) {
      simplex[dim] = { x: reflected, value: fReflected };
      continue;
    }
    const contracted = blend(fReflected < worst.value ? -0.5 : 0.5);
    const fContracted = evaluate(contracted);
    if (fContracted < Math.min(fReflected, worst.value)) {
      simplex[dim] = { x: contracted, value: fContracted };
      continue;
    }
    // Shrink toward the best vertex.
    for (let i = 1; i <= dim; i += 1) {
      const shrunk = simplex[0].x.map(
        (c, j) => c + 0.5 * (simplex[i].x[j] - c)
      );
      simplex[i] = { x: shrunk, value: evaluate(shrunk) };
      if (evals >= options.maxEvals) {
        break;
      }
    }
  }

  return { x: bestX, value: bestValue, evals };
}
