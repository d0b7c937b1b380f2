/**
 * Low-level bindings to the libmpsqvm shared library via koffi.
 *
 * This module handles library discovery, loading, symbol resolution,
 * and the interface-description cross-check. Everything above it works
 * with plain functions returning status codes; no Python toolchain is
 * involved on this side of the boundary.
 */

import koffi from "koffi";
import * as fs from "node:fs";
import * as path from "node:path";
import { fileURLToPath } from "node:url";

/** The nine functions the library exports, in declaration order. */
export const EXPORTED_FUNCTIONS = [
  "qvm_initialize",
  "qvm_finalize",
  "qvm_apply_single_qubit_gate",
  "qvm_apply_single_qubit_rot_gate",
  "qvm_apply_two_qubit_gate",
  "qvm_expectation_zz",
  "qvm_midpoint_entropy",
  "qvm_entropy_stats",
  "qvm_last_error",
] as const;

export type ExportedFunction = (typeof EXPORTED_FUNCTIONS)[number];

/** koffi signatures, matching qvm_interface.txt exactly. */
const SIGNATURES: Record<ExportedFunction, string> = {
  qvm_initialize:
    "int qvm_initialize(long n_qubits, long max_bond, double cutoff)",
  qvm_finalize: "int qvm_finalize()",
  qvm_apply_single_qubit_gate:
    "int qvm_apply_single_qubit_gate(long bit_loc, const char *gate_name)",
  qvm_apply_single_qubit_rot_gate:
    "int qvm_apply_single_qubit_rot_gate(long bit_loc, " +
    "const char *gate_name, double theta)",
  qvm_apply_two_qubit_gate:
    "int qvm_apply_two_qubit_gate(long site_a, long site_b, " +
    "const char *gate_name, double theta)",
  qvm_expectation_zz:
    "int qvm_expectation_zz(long site_a, long site_b, _Out_ double *out)",
  qvm_midpoint_entropy: "int qvm_midpoint_entropy(_Out_ double *out)",
  qvm_entropy_stats:
    "int qvm_entropy_stats(_Out_ double *out_mean, " +
    "_Out_ double *out_stderr)",
  qvm_last_error:
    "int qvm_last_error(_Out_ uint8_t *out_buffer, long capacity)",
};

export interface NativeLib {
  qvm_initialize(nQubits: number, maxBond: number, cutoff: number): number;
  qvm_finalize(): number;
  qvm_apply_single_qubit_gate(bitLoc: number, gateName: string): number;
  qvm_apply_single_qubit_rot_gate(
    bitLoc: number,
    gateName: string,
    theta: number
  ): number;
  qvm_apply_two_qubit_gate(
    siteA: number,
    siteB: number,
    gateName: string,
    theta: number
  ): number;
  qvm_expectation_zz(siteA: number, siteB: number, out: number[]): number;
  qvm_midpoint_entropy(out: number[]): number;
  qvm_entropy_stats(outMean: number[], outStderr: number[]): number;
  qvm_last_error(outBuffer: Buffer, capacity: number): number;
}

const LIBRARY_NAME = "libmpsqvm.so";
const INTERFACE_NAME = "qvm_interface.txt";

/**
 * Locate the shared library: MPSQVM_LIB_PATH first, then the build
 * directory of the enclosing repository, then the working directory.
 */
export function findLibraryPath(): string {
  const candidates: string[] = [];
  const envPath = process.env["MPSQVM_LIB_PATH"];
  if (envPath) {
    candidates.push(envPath);
  }
  const here = path.dirname(fileURLToPath(import.meta.url));
  // src/ or dist/ -> frontend/ -> repository root
  const repoRoot = path.resolve(here, "..", "..");
  candidates.push(path.join(repoRoot, "build", "ffi", LIBRARY_NAME));
  candidates.push(path.resolve("build", "ffi", LIBRARY_NAME));
  for (const candidate of candidates) {
    if (fs.existsSync(candidate)) {
      return candidate;
    }
  }
  throw new Error(
    `cannot find ${LIBRARY_NAME}; looked at ${candidates.join(", ")}. ` +
      `Build it with: python3 -m mpsqvm.ffi.build --out build/ffi`
  );
}

/** The function names declared in an interface-description text. */
export function interfaceFunctionNames(text: string): string[] {
  const names = new Set<string>();
  for (const match of text.matchAll(/\bqvm_\w+\b/g)) {
    names.add(match[0]);
  }
  return [...names].sort();
}

/**
 * Read the interface description shipped next to the library and check
 * that it declares every function this client binds. Quietly skipped
 * when the file is absent (custom library locations).
 */
function crossCheckInterface(libraryPath: string): void {
  const interfacePath = path.join(path.dirname(libraryPath), INTERFACE_NAME);
  if (!fs.existsSync(interfacePath)) {
    return;
  }
  const declared = new Set(
    interfaceFunctionNames(fs.readFileSync(interfacePath, "ascii"))
  );
  for (const name of EXPORTED_FUNCTIONS) {
    if (!declared.has(name)) {
      throw new Error(
        `interface description ${interfacePath} does not declare ${name}`
      );
    }
  }
}

/**
 * Load the shared library and resolve all nine exports.
 *
 * A missing export fails immediately with the symbol's name, rather
 * than at first call.
 */
export function loadLibrary(libraryPath?: string): NativeLib {
  const resolved = libraryPath ?? findLibraryPath();
  crossCheckInterface(resolved);
  let lib: koffi.IKoffiLib;
  try {
    lib = koffi.load(resolved);
  } catch (cause) {
    throw new Error(`cannot load shared library at ${resolved}: ${cause}`);
  }
  const bound: Record<string, unknown> = {};
  for (const name of EXPORTED_FUNCTIONS) {
    try {
      bound[name] = lib.func(SIGNATURES[name]);
    } catch (cause) {
      throw new Error(
        `shared library ${resolved} is missing export ${name}: ${cause}`
      );
    }
  }
  return bound as unknown as NativeLib;
}
