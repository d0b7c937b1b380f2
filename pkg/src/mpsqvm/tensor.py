"""Dense complex tensor arithmetic: contraction and truncated SVD.

Tensors are plain ``numpy.ndarray`` objects of dtype complex128.  The index
list of a tensor is its ``shape``; entries are linearized in row-major (C)
order, i.e. the last index varies fastest.  Rank 0 (a scalar array) is a
valid tensor.  Every module in this package uses this one convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import scipy.linalg


@dataclass(frozen=True)
class TruncationPolicy:
    """Bond truncation rule applied after every two-site decomposition.

    max_bond: hard cap on the number of singular values kept.
    cutoff: discard-weight threshold on the normalized squared spectrum.
        The kept rank is the smallest one retaining cumulative squared
        weight >= 1 - cutoff (then capped by max_bond).
    renormalize: rescale the kept singular values so their squared sum
        equals the original squared sum.  Keeps simulated states unit-norm
        after truncation, which the entropy diagnostics assume.
    """

    max_bond: int
    cutoff: float = 0.0
    renormalize: bool = True

    def __post_init__(self):
        if self.max_bond < 1:
            raise ValueError(f"max_bond must be >= 1, got {self.max_bond}")
        if not 0.0 <= self.cutoff < 1.0:
            raise ValueError(f"cutoff must lie in [0, 1), got {self.cutoff}")


@dataclass
class SvdResult:
    """Outcome of a truncated singular value decomposition.

    left_factor has the row-group indices plus a trailing index of size
    kept_rank; right_factor has a leading kept_rank index plus the
    column-group indices.  Both are isometries.  discarded_weight is the
    squared weight of the dropped singular values relative to the full
    spectrum, reported before any renormalization.
    """

    left_factor: np.ndarray
    singular_values: np.ndarray
    right_factor: np.ndarray
    kept_rank: int
    discarded_weight: float = field(default=0.0)


def contract(a: np.ndarray, b: np.ndarray, pairs: Sequence[tuple[int, int]]) -> np.ndarray:
    """Contract tensor ``a`` with tensor ``b`` over the given index pairs.

    Each pair (i, j) sums index i of ``a`` against index j of ``b``.  The
    result carries a's uncontracted indices (in order) followed by b's
    uncontracted indices (in order).  An empty ``pairs`` list yields the
    outer product.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    axes_a = [p[0] for p in pairs]
    axes_b = [p[1] for p in pairs]
    if len(set(axes_a)) != len(axes_a) or len(set(axes_b)) != len(axes_b):
        raise ValueError("contraction pairs must be distinct")
    for i, j in pairs:
        if not (-a.ndim <= i < a.ndim) or i < 0:
            raise ValueError(f"index {i} out of range for tensor of rank {a.ndim}")
        if not (-b.ndim <= j < b.ndim) or j < 0:
            raise ValueError(f"index {j} out of range for tensor of rank {b.ndim}")
        if a.shape[i] != b.shape[j]:
            raise ValueError(
                f"dimension mismatch: a index {i} has size {a.shape[i]}, "
                f"b index {j} has size {b.shape[j]}"
            )
    return np.tensordot(a, b, axes=(axes_a, axes_b))


def _stable_svd(matrix: np.ndarray, compute_uv: bool = True):
    # gesdd is fast but can fail to converge on ill-conditioned input;
    # gesvd is the slow, robust fallback.
    try:
        return scipy.linalg.svd(matrix, full_matrices=False, check_finite=False,
                                compute_uv=compute_uv, lapack_driver="gesdd")
    except np.linalg.LinAlgError:
        return scipy.linalg.svd(matrix, full_matrices=False, check_finite=False,
                                compute_uv=compute_uv, lapack_driver="gesvd")


def _split_spectrum(matrix: np.ndarray, policy: TruncationPolicy):
    """Decompose a 2D matrix and truncate its spectrum under ``policy``.

    Returns (u_kept, s_kept, vh_kept, kept_rank, discarded_weight).  This
    is the single place the truncation rule lives; every two-site split in
    the package funnels through it.
    """
    u, s, vh = _stable_svd(matrix)
    total = float(np.sum(s**2))
    if total == 0.0:
        raise ValueError("cannot decompose an all-zero tensor")

    # Smallest rank retaining cumulative squared weight >= (1 - cutoff),
    # then the hard bond cap.  At least one value is always kept.
    cumulative = np.cumsum(s**2)
    kept = int(np.searchsorted(cumulative, (1.0 - policy.cutoff) * total) + 1)
    kept = max(1, min(kept, policy.max_bond, len(s)))

    discarded = float(np.sum(s[kept:] ** 2)) / total
    s_kept = s[:kept].astype(np.float64)
    if policy.renormalize and kept < len(s):
        kept_weight = float(np.sum(s_kept**2))
        if kept_weight > 0.0:
            s_kept = s_kept * np.sqrt(total / kept_weight)
    return u[:, :kept], s_kept, vh[:kept, :], kept, discarded


def truncated_svd(t: np.ndarray, row_axes: Sequence[int],
                  policy: TruncationPolicy) -> SvdResult:
    """Split ``t`` across the bipartition (row_axes | remaining axes).

    The tensor is matricized with ``row_axes`` (in the given order) as rows
    and the remaining axes (in original order) as columns, then decomposed
    and truncated under ``policy``.
    """
    t = np.asarray(t)
    row_axes = list(row_axes)
    if len(set(row_axes)) != len(row_axes) or any(
            ax < 0 or ax >= t.ndim for ax in row_axes):
        raise ValueError(f"invalid row-axis group {row_axes} for rank {t.ndim}")
    col_axes = [ax for ax in range(t.ndim) if ax not in row_axes]
    if not row_axes or not col_axes:
        raise ValueError("both index groups of the split must be nonempty")

    row_dims = tuple(t.shape[ax] for ax in row_axes)
    col_dims = tuple(t.shape[ax] for ax in col_axes)
    matrix = t.transpose(row_axes + col_axes).reshape(
        int(np.prod(row_dims)), int(np.prod(col_dims)))

    u, s_kept, vh, kept, discarded = _split_spectrum(matrix, policy)
    left = np.ascontiguousarray(u).reshape(row_dims + (kept,))
    right = np.ascontiguousarray(vh).reshape((kept,) + col_dims)
    return SvdResult(left, s_kept, right, kept, discarded)
