/**
 * Command-line demo: optimize QAOA MaxCut on a seeded 3-regular graph
 * through the shared library and print the result buffer.
 *
 *   node dist/demo.js [qubits] [depth] [maxBond] [seed]
 *
 * Writes qaoa_demo.csv next to the working directory in the same
 * column schema the simulator CLI uses for MaxCut ensembles.
 */

import * as fs from "node:fs";
import { demoCsv, runQaoaDemo } from "./qaoa.js";

function intArg(position: number, fallback: number): number {
  const raw = process.argv[2 + position];
  if (raw === undefined) {
    return fallback;
  }
  const value = Number.parseInt(raw, 10);
  if (Number.isNaN(value)) {
    throw new Error(`argument ${position + 1}: expected integer, got ${raw}`);
  }
  return value;
}

const nQubits = intArg(0, 4);
const depth = intArg(1, 2);
const maxBond = intArg(2, 4);
const seed = intArg(3, 0);

console.log(
  `QAOA MaxCut demo: N=${nQubits} p=${depth} chi=${maxBond} seed=${seed}`
);
const started = Date.now();
const buffer = runQaoaDemo(nQubits, depth, maxBond, seed);
const elapsed = ((Date.now() - started) / 1000).toFixed(1);

console.log(`energy            ${buffer.energy}`);
console.log(`best params       [${buffer.bestParams.join(", ")}]`);
for (const key of buffer.keys()) {
  console.log(`${key.padEnd(18)}${buffer.getInformation(key)}`);
}
console.log(`elapsed           ${elapsed}s`);

const csvPath = "qaoa_demo.csv";
fs.writeFileSync(csvPath, demoCsv(buffer, nQubits, depth, maxBond));
console.log(`wrote ${csvPath}`);
