/**
 * A thin stateful wrapper over the native bindings.
 *
 * Every call checks the returned status code and, on failure, throws a
 * QvmError carrying both the numeric status and the library's own
 * diagnostic text from qvm_last_error.
 */

import { NativeLib } from "./native.js";

export const STATUS_OK = 0;
export const STATUS_NOT_INITIALIZED = 1;
export const STATUS_BAD_ARGUMENT = 2;
export const STATUS_UNKNOWN_GATE = 3;
export const STATUS_INTERNAL = 4;
export const STATUS_REENTRANCY = 5;

const STATUS_LABELS: Record<number, string> = {
  [STATUS_NOT_INITIALIZED]: "not initialized",
  [STATUS_BAD_ARGUMENT]: "bad argument",
  [STATUS_UNKNOWN_GATE]: "unknown gate",
  [STATUS_INTERNAL]: "internal error",
  [STATUS_REENTRANCY]: "reentrant call",
};

export class QvmError extends Error {
  readonly status: number;
  readonly detail: string;

  constructor(operation: string, status: number, detail: string) {
    const label = STATUS_LABELS[status] ?? `status ${status}`;
    super(`${operation} failed (${label}): ${detail}`);
    this.name = "QvmError";
    this.status = status;
    this.detail = detail;
  }
}

const ERROR_CAPACITY = 512;

export class QvmSession {
  private readonly lib: NativeLib;

  constructor(lib: NativeLib) {
    this.lib = lib;
  }

  /** The library's most recent diagnostic message, possibly empty. */
  lastError(): string {
    const buffer = Buffer.alloc(ERROR_CAPACITY);
    const status = this.lib.qvm_last_error(buffer, ERROR_CAPACITY);
    if (status !== STATUS_OK) {
      return "(diagnostic text unavailable)";
    }
    const end = buffer.indexOf(0);
    return buffer.toString("utf8", 0, end < 0 ? buffer.length : end);
  }

  private check(operation: string, status: number): void {
    if (status !== STATUS_OK) {
      throw new QvmError(operation, status, this.lastError());
    }
  }

  initialize(nQubits: number, maxBond: number, cutoff = 0.0): void {
    this.check(
      "qvm_initialize",
      this.lib.qvm_initialize(nQubits, maxBond, cutoff)
    );
  }

  finalize(): void {
    this.check("qvm_finalize", this.lib.qvm_finalize());
  }

  /** Reset to |0...0> with the given geometry, initialized or not. */
  reset(nQubits: number, maxBond: number, cutoff = 0.0): void {
    this.lib.qvm_finalize();
    this.initialize(nQubits, maxBond, cutoff);
  }

  applyGate(site: number, gateName: string): void {
    this.check(
      "qvm_apply_single_qubit_gate",
      this.lib.qvm_apply_single_qubit_gate(site, gateName)
    );
  }

  applyRotation(site: number, gateName: string, theta: number): void {
    this.check(
      "qvm_apply_single_qubit_rot_gate",
      this.lib.qvm_apply_single_qubit_rot_gate(site, gateName, theta)
    );
  }

  applyTwoQubit(
    siteA: number,
    siteB: number,
    gateName: string,
    theta = Number.NaN
  ): void {
    this.check(
      "qvm_apply_two_qubit_gate",
      this.lib.qvm_apply_two_qubit_gate(siteA, siteB, gateName, theta)
    );
  }

  expectationZZ(siteA: number, siteB: number): number {
    const out = [0.0];
    this.check(
      "qvm_expectation_zz",
      this.lib.qvm_expectation_zz(siteA, siteB, out)
    );
    return out[0];
  }

  midpointEntropy(): number {
    const out = [0.0];
    this.check("qvm_midpoint_entropy", this.lib.qvm_midpoint_entropy(out));
    return out[0];
  }

  /** Mean and standard error of the entropy over all internal bonds. */
  entropyStats(): { mean: number; stderr: number } {
    const outMean = [0.0];
    const outStderr = [0.0];
    this.check(
      "qvm_entropy_stats",
      this.lib.qvm_entropy_stats(outMean, outStderr)
    );
    return { mean: outMean[0], stderr: outStderr[0] };
  }
}
