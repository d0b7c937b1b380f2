import { execSync } from "node:child_process";
import * as fs from "node:fs";
import * as path from "node:path";
import { fileURLToPath } from "node:url";

/** frontend/test -> frontend -> repository root */
export const REPO_ROOT = path.resolve(
  path.dirname(fileURLToPath(import.meta.url)),
  "..",
  ".."
);
export const LIBRARY_DIR = path.join(REPO_ROOT, "build", "ffi");
export const LIBRARY_PATH = path.join(LIBRARY_DIR, "libmpsqvm.so");
export const INTERFACE_PATH = path.join(LIBRARY_DIR, "qvm_interface.txt");

/** Build the shared library if it is not already there. */
export function ensureLibrary(): string {
  if (!fs.existsSync(LIBRARY_PATH)) {
    execSync(`python3 -m mpsqvm.ffi.build --out ${LIBRARY_DIR}`, {
      cwd: REPO_ROOT,
      stdio: "inherit",
    });
  }
  return LIBRARY_PATH;
}

/** Run a python snippet against the installed simulator package. */
export function runPython(code: string): string {
  return execSync("python3 -", {
    cwd: REPO_ROOT,
    input: code,
    encoding: "utf8",
  });
}
