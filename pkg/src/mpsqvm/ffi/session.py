"""Single-session simulator facade behind the exported C boundary.

Every boundary operation returns a status integer and never raises;
failures set a last-error message readable through last_error().  The
status numbering is stable and documented in the shipped interface
description:

    0 ok, 1 not-initialized, 2 bad-argument, 3 unknown-gate,
    4 internal-numeric, 5 reentrancy.

The boundary is single-threaded by contract: a non-blocking lock
detects concurrent entry and reports status 5 instead of corrupting
state.  Successful calls clear the last-error text; the reentrancy
path leaves it untouched (the other thread owns it at that moment).
"""

from __future__ import annotations

import math
import threading

from ..entropy import entropy_mean_stderr, midpoint_entropy
from ..gates import GateSpec, gate_matrix
from ..mps import MpsState
from ..observables import PauliTerm, expectation
from ..tensor import TruncationPolicy

STATUS_OK = 0
STATUS_NOT_INITIALIZED = 1
STATUS_BAD_ARGUMENT = 2
STATUS_UNKNOWN_GATE = 3
STATUS_INTERNAL = 4
STATUS_REENTRANCY = 5

_PLAIN_ONE_QUBIT = ("H", "X", "Y", "Z", "S", "T")
_ROT_ONE_QUBIT = ("Rx", "Ry", "Rz")
_TWO_QUBIT = ("CNOT", "CX", "CZ", "SWAP", "Rzz")


class _Failure(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status


class Session:
    """Lifecycle, gates, and diagnostics for one global simulator state."""

    def __init__(self):
        self._state: MpsState | None = None
        self._lifecycle = "uninitialized"
        self._last_error = ""
        self._lock = threading.Lock()

    # -- plumbing ----------------------------------------------------------

    def _run(self, body) -> int:
        if not self._lock.acquire(blocking=False):
            return STATUS_REENTRANCY
        try:
            body()
        except _Failure as failure:
            self._last_error = str(failure)
            return failure.status
        except Exception as unexpected:
            self._last_error = f"internal error: {unexpected!r}"
            return STATUS_INTERNAL
        else:
            self._last_error = ""
            return STATUS_OK
        finally:
            self._lock.release()

    def _require_ready(self) -> MpsState:
        if self._lifecycle != "ready" or self._state is None:
            raise _Failure(STATUS_NOT_INITIALIZED, "session not initialized")
        return self._state

    def _require_site(self, state: MpsState, site: int, label: str) -> int:
        site = int(site)
        if not 1 <= site <= state.n_qubits:
            raise _Failure(
                STATUS_BAD_ARGUMENT,
                f"{label} {site} out of range 1..{state.n_qubits}")
        return site

    # -- lifecycle ----------------------------------------------------------

    def initialize(self, n_qubits: int, max_bond: int, cutoff: float) -> int:
        def body():
            if self._lifecycle == "ready":
                raise _Failure(STATUS_BAD_ARGUMENT,
                               "session already initialized; finalize first")
            if n_qubits < 1:
                raise _Failure(STATUS_BAD_ARGUMENT,
                               f"n_qubits must be >= 1, got {n_qubits}")
            if max_bond < 1:
                raise _Failure(STATUS_BAD_ARGUMENT,
                               f"max_bond must be >= 1, got {max_bond}")
            if not (isinstance(cutoff, (int, float)) and math.isfinite(cutoff)
                    and 0.0 <= cutoff < 1.0):
                raise _Failure(STATUS_BAD_ARGUMENT,
                               f"cutoff must be in [0, 1), got {cutoff!r}")
            policy = TruncationPolicy(max_bond=int(max_bond),
                                      cutoff=float(cutoff))
            self._state = MpsState.computational_zero(int(n_qubits), policy)
            self._lifecycle = "ready"
        return self._run(body)

    def finalize(self) -> int:
        def body():
            self._state = None
            self._lifecycle = "finalized"
        return self._run(body)

    # -- gates ---------------------------------------------------------------

    def apply_single_qubit_gate(self, bit_loc: int, gate_name: str) -> int:
        def body():
            state = self._require_ready()
            site = self._require_site(state, bit_loc, "bit_loc")
            if gate_name not in _PLAIN_ONE_QUBIT:
                if gate_name in _ROT_ONE_QUBIT:
                    raise _Failure(
                        STATUS_BAD_ARGUMENT,
                        f"gate {gate_name!r} requires an angle; use the "
                        f"rotation entry point")
                raise _Failure(STATUS_UNKNOWN_GATE,
                               f"unknown single-qubit gate {gate_name!r}")
            state.apply_one_qubit(site, gate_matrix(GateSpec(gate_name)))
        return self._run(body)

    def apply_single_qubit_rot_gate(self, bit_loc: int, gate_name: str,
                                    theta: float) -> int:
        def body():
            state = self._require_ready()
            site = self._require_site(state, bit_loc, "bit_loc")
            if gate_name not in _ROT_ONE_QUBIT:
                raise _Failure(
                    STATUS_UNKNOWN_GATE,
                    f"unknown single-qubit rotation gate {gate_name!r}")
            if not (isinstance(theta, (int, float)) and math.isfinite(theta)):
                raise _Failure(STATUS_BAD_ARGUMENT,
                               f"theta must be finite, got {theta!r}")
            state.apply_one_qubit(
                site, gate_matrix(GateSpec(gate_name, float(theta))))
        return self._run(body)

    def apply_two_qubit_gate(self, site_a: int, site_b: int, gate_name: str,
                             theta: float = math.nan) -> int:
        def body():
            state = self._require_ready()
            a = self._require_site(state, site_a, "site_a")
            b = self._require_site(state, site_b, "site_b")
            if a == b:
                raise _Failure(STATUS_BAD_ARGUMENT,
                               f"sites must differ, got ({a}, {b})")
            if gate_name not in _TWO_QUBIT:
                raise _Failure(STATUS_UNKNOWN_GATE,
                               f"unknown two-qubit gate {gate_name!r}")
            if gate_name == "Rzz":
                if not (isinstance(theta, (int, float))
                        and math.isfinite(theta)):
                    raise _Failure(STATUS_BAD_ARGUMENT,
                                   f"Rzz theta must be finite, got {theta!r}")
                spec = GateSpec("Rzz", float(theta))
            else:
                spec = GateSpec(gate_name)
            state.apply_two_qubit(a, b, gate_matrix(spec))
        return self._run(body)

    # -- diagnostics ----------------------------------------------------------

    def expectation_zz(self, site_a: int, site_b: int) -> tuple[int, float]:
        out = [0.0]

        def body():
            state = self._require_ready()
            a = self._require_site(state, site_a, "site_a")
            b = self._require_site(state, site_b, "site_b")
            if a == b:
                raise _Failure(STATUS_BAD_ARGUMENT,
                               f"sites must differ, got ({a}, {b})")
            out[0] = expectation(state, PauliTerm(1.0, {a: "Z", b: "Z"}))
        return self._run(body), out[0]

    def midpoint_entropy(self) -> tuple[int, float]:
        out = [0.0]

        def body():
            state = self._require_ready()
            if state.n_qubits < 2:
                raise _Failure(STATUS_BAD_ARGUMENT,
                               "midpoint entropy needs at least 2 qubits")
            out[0] = midpoint_entropy(state)
        return self._run(body), out[0]

    def entropy_stats(self) -> tuple[int, float, float]:
        out = [0.0, 0.0]

        def body():
            state = self._require_ready()
            if state.n_qubits < 2:
                raise _Failure(STATUS_BAD_ARGUMENT,
                               "entropy statistics need at least 2 qubits "
                               "(no internal bonds otherwise)")
            stats = entropy_mean_stderr(state)
            out[0] = stats.mean
            out[1] = stats.stderr
        return self._run(body), out[0], out[1]

    def last_error(self) -> str:
        """Most recent failure message; empty after any successful call."""
        return self._last_error


#: The one session the exported shared library drives.
GLOBAL_SESSION = Session()
