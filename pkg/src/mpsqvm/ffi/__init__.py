"""Exported C boundary: session semantics and the library builder."""

from .session import (
    GLOBAL_SESSION,
    STATUS_BAD_ARGUMENT,
    STATUS_INTERNAL,
    STATUS_NOT_INITIALIZED,
    STATUS_OK,
    STATUS_REENTRANCY,
    STATUS_UNKNOWN_GATE,
    Session,
)

__all__ = [
    "GLOBAL_SESSION",
    "Session",
    "STATUS_OK",
    "STATUS_NOT_INITIALIZED",
    "STATUS_BAD_ARGUMENT",
    "STATUS_UNKNOWN_GATE",
    "STATUS_INTERNAL",
    "STATUS_REENTRANCY",
]
