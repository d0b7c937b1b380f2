"""Build the exported shared library and its interface description.

Produces libmpsqvm.so, a platform-native library embedding the
interpreter and exporting exactly nine C symbols, plus
qvm_interface.txt describing the signatures and status codes.  Run as

    python -m mpsqvm.ffi.build --out DIR

The library pins the interpreter it was built against: a constructor
re-opens libpython with RTLD_GLOBAL so hosts that load dependencies
with local visibility (most non-Python hosts) can still run the
interpreter's own extension modules.
"""

from __future__ import annotations

import argparse
import pathlib
import sysconfig
import tempfile

import cffi

API_DECLARATIONS = """
int qvm_initialize(long n_qubits, long max_bond, double cutoff);
int qvm_finalize(void);
int qvm_apply_single_qubit_gate(long bit_loc, const char *gate_name);
int qvm_apply_single_qubit_rot_gate(long bit_loc, const char *gate_name,
                                    double theta);
int qvm_apply_two_qubit_gate(long site_a, long site_b, const char *gate_name,
                             double theta);
int qvm_expectation_zz(long site_a, long site_b, double *out_value);
int qvm_midpoint_entropy(double *out_value);
int qvm_entropy_stats(double *out_mean, double *out_stderr);
int qvm_last_error(char *out_buffer, long capacity);
"""

EXPORT_NAMES = (
    "qvm_initialize",
    "qvm_finalize",
    "qvm_apply_single_qubit_gate",
    "qvm_apply_single_qubit_rot_gate",
    "qvm_apply_two_qubit_gate",
    "qvm_expectation_zz",
    "qvm_midpoint_entropy",
    "qvm_entropy_stats",
    "qvm_last_error",
)

_INIT_CODE_TEMPLATE = '''
import sys

if {package_root!r} not in sys.path:
    sys.path.insert(0, {package_root!r})

from _mpsqvm_boundary import ffi
from mpsqvm.ffi.session import GLOBAL_SESSION as _session

_INTERNAL = 4
_BAD_ARGUMENT = 2


def _text(pointer):
    if pointer == ffi.NULL:
        return None
    return ffi.string(pointer).decode("ascii", "replace")


@ffi.def_extern()
def qvm_initialize(n_qubits, max_bond, cutoff):
    try:
        return _session.initialize(n_qubits, max_bond, cutoff)
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_finalize():
    try:
        return _session.finalize()
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_apply_single_qubit_gate(bit_loc, gate_name):
    try:
        name = _text(gate_name)
        if name is None:
            return _BAD_ARGUMENT
        return _session.apply_single_qubit_gate(bit_loc, name)
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_apply_single_qubit_rot_gate(bit_loc, gate_name, theta):
    try:
        name = _text(gate_name)
        if name is None:
            return _BAD_ARGUMENT
        return _session.apply_single_qubit_rot_gate(bit_loc, name, theta)
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_apply_two_qubit_gate(site_a, site_b, gate_name, theta):
    try:
        name = _text(gate_name)
        if name is None:
            return _BAD_ARGUMENT
        return _session.apply_two_qubit_gate(site_a, site_b, name, theta)
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_expectation_zz(site_a, site_b, out_value):
    try:
        if out_value == ffi.NULL:
            return _BAD_ARGUMENT
        status, value = _session.expectation_zz(site_a, site_b)
        out_value[0] = value
        return status
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_midpoint_entropy(out_value):
    try:
        if out_value == ffi.NULL:
            return _BAD_ARGUMENT
        status, value = _session.midpoint_entropy()
        out_value[0] = value
        return status
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_entropy_stats(out_mean, out_stderr):
    try:
        if out_mean == ffi.NULL or out_stderr == ffi.NULL:
            return _BAD_ARGUMENT
        status, mean, stderr = _session.entropy_stats()
        out_mean[0] = mean
        out_stderr[0] = stderr
        return status
    except Exception:
        return _INTERNAL


@ffi.def_extern()
def qvm_last_error(out_buffer, capacity):
    try:
        if out_buffer == ffi.NULL or capacity < 1:
            return _BAD_ARGUMENT
        message = _session.last_error().encode("ascii", "replace")
        message = message[:capacity - 1] + b"\\x00"
        ffi.memmove(out_buffer, message, len(message))
        return 0
    except Exception:
        return _INTERNAL
'''

INTERFACE_DESCRIPTION = """libmpsqvm shared-library interface
==================================

A platform-native shared library exporting a matrix-product-state
quantum circuit simulator with one global session.  All arguments and
results are scalar numbers, null-terminated ASCII byte strings, or
caller-provided output slots; the caller never receives a handle to
internal state.

Status codes (returned by every function)
-----------------------------------------
  0  ok
  1  not-initialized      (session is not ready)
  2  bad-argument         (range, parity, lifecycle, or value errors)
  3  unknown-gate         (gate name not accepted by that entry point)
  4  internal-numeric     (unexpected numerical failure)
  5  reentrancy           (concurrent entry detected; call rejected)

After any successful call the last-error text is cleared; after a
failure it describes the failure.  A reentrancy rejection leaves the
text untouched.

Functions
---------
int qvm_initialize(long n_qubits, long max_bond, double cutoff);
    Create the session state |0...0> with the given bond cap and
    truncation cutoff (0 <= cutoff < 1).  Fails with 2 if the session
    is already initialized (finalize first), or on n_qubits < 1 or
    max_bond < 1.

int qvm_finalize(void);
    Release the state.  Idempotent; always returns 0.  After this,
    every state-touching call returns 1 until qvm_initialize.

int qvm_apply_single_qubit_gate(long bit_loc, const char *gate_name);
    Apply a fixed one-qubit gate: H, X, Y, Z, S, T.  bit_loc is
    1-based.  Rotation names (Rx, Ry, Rz) are rejected with 2 here:
    they require an angle and belong to the rotation entry point.

int qvm_apply_single_qubit_rot_gate(long bit_loc, const char *gate_name,
                                    double theta);
    Apply Rx, Ry or Rz with angle theta (radians, finite).  Any other
    name returns 3.  Convention: Rz(t) = diag(exp(-it/2), exp(+it/2)).

int qvm_apply_two_qubit_gate(long site_a, long site_b,
                             const char *gate_name, double theta);
    Apply CNOT (alias CX), CZ, SWAP (theta ignored; pass anything,
    NaN included) or Rzz (theta required, finite).  Sites are 1-based
    and must differ.  Non-adjacent sites are handled internally by
    swap routing.  Convention: Rzz(t) = diag(e^{-it/2}, e^{+it/2},
    e^{+it/2}, e^{-it/2}) acting on |q_a q_b> with q_a the high bit.

int qvm_expectation_zz(long site_a, long site_b, double *out_value);
    Write <Z_a Z_b> of the current state into *out_value.  Sites are
    1-based and must differ.

int qvm_midpoint_entropy(double *out_value);
    Write the bipartite entropy (nats) at the floor(N/2) bond.
    Requires N >= 2 (status 2 otherwise).

int qvm_entropy_stats(double *out_mean, double *out_stderr);
    Write the mean and standard error of the entropy over all N-1
    internal bonds.  The standard error uses the Bessel-corrected
    sample deviation divided by sqrt(N-1), and is 0 for a single
    bond.  Requires N >= 2 (status 2 otherwise).

int qvm_last_error(char *out_buffer, long capacity);
    Copy the last-error text into out_buffer, truncated to capacity
    with a terminating NUL (capacity >= 1 required).  Does not alter
    the stored text.

Threading
---------
The boundary is single-threaded.  Concurrent entry is detected and
rejected with status 5; no call ever aborts the host process.
"""


def build(out_dir: str | pathlib.Path) -> pathlib.Path:
    """Compile the library into out_dir and write the interface file.

    Returns the path of the built library.
    """
    import mpsqvm

    out_path = pathlib.Path(out_dir).resolve()
    out_path.mkdir(parents=True, exist_ok=True)
    package_root = str(pathlib.Path(mpsqvm.__file__).resolve().parent.parent)
    libpython = sysconfig.get_config_var("INSTSONAME") or "libpython3.so"

    ffibuilder = cffi.FFI()
    ffibuilder.embedding_api(API_DECLARATIONS)
    ffibuilder.set_source("_mpsqvm_boundary", f"""
        #include <dlfcn.h>
        /* Hosts commonly load this library with RTLD_LOCAL; re-open the
           interpreter library globally so its extension modules resolve. */
        __attribute__((constructor))
        static void _promote_interpreter_symbols(void) {{
            dlopen("{libpython}", RTLD_NOW | RTLD_GLOBAL);
        }}
    """)
    ffibuilder.embedding_init_code(
        _INIT_CODE_TEMPLATE.format(package_root=package_root))
    with tempfile.TemporaryDirectory() as tmp:
        built = ffibuilder.compile(target="libmpsqvm.*", tmpdir=tmp)
        built = pathlib.Path(built)
        destination = out_path / built.name
        destination.write_bytes(built.read_bytes())
    (out_path / "qvm_interface.txt").write_text(INTERFACE_DESCRIPTION)
    return destination


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="build the libmpsqvm shared library")
    parser.add_argument("--out", default="build/ffi",
                        help="output directory (default: build/ffi)")
    args = parser.parse_args(argv)
    library = build(args.out)
    print(f"built {library}")
    print(f"interface description: {library.parent / 'qvm_interface.txt'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
