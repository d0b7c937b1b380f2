export {
  EXPORTED_FUNCTIONS,
  findLibraryPath,
  interfaceFunctionNames,
  loadLibrary,
} from "./native.js";
export type { ExportedFunction, NativeLib } from "./native.js";
export {
  QvmError,
  QvmSession,
  STATUS_BAD_ARGUMENT,
  STATUS_INTERNAL,
  STATUS_NOT_INITIALIZED,
  STATUS_OK,
  STATUS_REENTRANCY,
  STATUS_UNKNOWN_GATE,
} from "./session.js";
export { Rng } from "./random.js";
export { randomRegularGraph } from "./graph.js";
export type { Edge } from "./graph.js";
export { nelderMead } from "./optimizer.js";
export type { OptimizeOptions, OptimizeResult } from "./optimizer.js";
export { ClientBuffer, demoCsv, runQaoaDemo } from "./qaoa.js";
export type { DemoOptions } from "./qaoa.js";
