"""Tour of the exported shared-library boundary.

Builds libmpsqvm into build/ffi, loads it with ctypes, and drives the
nine exported functions the way a non-Python host would: scalar
arguments in, status codes and output slots back.  Every call returns a
status; nothing raises across the boundary.
"""

import ctypes
import math

from mpsqvm.ffi.build import build

library_path = build("build/ffi")
print(f"built {library_path}")
lib = ctypes.CDLL(str(library_path))

lib.qvm_initialize.argtypes = (ctypes.c_long, ctypes.c_long,
                               ctypes.c_double)
lib.qvm_apply_single_qubit_gate.argtypes = (ctypes.c_long, ctypes.c_char_p)
lib.qvm_apply_two_qubit_gate.argtypes = (ctypes.c_long, ctypes.c_long,
                                         ctypes.c_char_p, ctypes.c_double)
lib.qvm_expectation_zz.argtypes = (ctypes.c_long, ctypes.c_long,
                                   ctypes.POINTER(ctypes.c_double))
lib.qvm_midpoint_entropy.argtypes = (ctypes.POINTER(ctypes.c_double),)
lib.qvm_last_error.argtypes = (ctypes.c_char_p, ctypes.c_long)


def last_error():
    buffer = ctypes.create_string_buffer(256)
    lib.qvm_last_error(buffer, 256)
    return buffer.value.decode()


# A two-qubit session: prepare a Bell pair and measure it.
print("initialize(2, 8, 0.0)      ->", lib.qvm_initialize(2, 8, 0.0))
print('apply H on qubit 1         ->',
      lib.qvm_apply_single_qubit_gate(1, b"H"))
print('apply CNOT on (1, 2)       ->',
      lib.qvm_apply_two_qubit_gate(1, 2, b"CNOT", math.nan))

value = ctypes.c_double()
lib.qvm_expectation_zz(1, 2, ctypes.byref(value))
print(f"<Z1 Z2>                    = {value.value:+.6f}  (Bell pair: +1)")
lib.qvm_midpoint_entropy(ctypes.byref(value))
print(f"midpoint entropy           = {value.value:.6f}  (ln 2 = "
      f"{math.log(2):.6f})")

# Failures come back as status codes with readable text, not crashes.
print()
print("status codes for bad calls:")
print("  unknown gate 'Q'         ->",
      lib.qvm_apply_single_qubit_gate(1, b"Q"), "-", last_error())
print("  site out of range        ->",
      lib.qvm_apply_single_qubit_gate(9, b"H"), "-", last_error())
print("  Rzz with NaN angle       ->",
      lib.qvm_apply_two_qubit_gate(1, 2, b"Rzz", math.nan), "-",
      last_error())
print("  equal sites              ->",
      lib.qvm_apply_two_qubit_gate(1, 1, b"CNOT", 0.0), "-", last_error())

print()
print("finalize                   ->", lib.qvm_finalize())
print("gate after finalize        ->",
      lib.qvm_apply_single_qubit_gate(1, b"H"), "-", last_error())
print()
print(f"interface description: {library_path.parent / 'qvm_interface.txt'}")
