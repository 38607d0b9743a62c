"""Eigenvalues of Hermitian matrices that are large but structurally sparse.

Small matrices go straight to LAPACK.  Larger ones are split into the
connected components of their nonzero pattern; each component is solved on
its own, with a banded solver when the component is narrow.  No knowledge of
where the matrix came from is used.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import NumericalError

DENSE_LIMIT = 512
_BATCH_LIMIT = 64


def bandwidth(a: np.ndarray) -> int:
    rows, cols = np.nonzero(a)
    if rows.size == 0:
        return 0
    return int(np.max(np.abs(rows - cols)))


def upper_band(a: np.ndarray, u: int) -> np.ndarray:
    """LAPACK upper band storage: ``ab[u + i - j, j] = a[i, j]`` for ``j >= i``."""
    n = a.shape[0]
    ab = np.zeros((u + 1, n), dtype=a.dtype)
    for k in range(u + 1):
        ab[u - k, k:] = np.diagonal(a, k)
    return ab


def banded_eigvalsh(ab: np.ndarray) -> np.ndarray:
    """Eigenvalues from upper band storage.

    A Hermitian tridiagonal matrix is unitarily similar (diagonal phase
    gauge) to the real one with ``|off-diagonal|``, so that case always runs
    in real arithmetic.
    """
    try:
        if ab.shape[0] == 2:
            return scipy.linalg.eigvalsh_tridiagonal(
                ab[1].real, np.abs(ab[0, 1:]), lapack_driver="sterf", check_finite=False
            )
        return scipy.linalg.eigvals_banded(ab, lower=False, check_finite=False)
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NumericalError(f"banded eigensolver failed: {exc}") from exc


def _dense(a):
    try:
        return np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed: {exc}") from exc


def _component(a):
    n = a.shape[0]
    u = bandwidth(a)
    if n > _BATCH_LIMIT and 4 * u < n:
        return banded_eigvalsh(upper_band(a, u))
    return _dense(a)


def eigvalsh(a: np.ndarray, dense_limit: int = DENSE_LIMIT) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix."""
    a = np.asarray(a)
    if not np.all(np.isfinite(a)):
        raise NumericalError("matrix has non-finite entries")
    n = a.shape[0]
    if n <= dense_limit:
        return _dense(a)

    rows, cols = np.nonzero(a)
    graph = coo_matrix((np.ones(rows.size, dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(graph, directed=False)
    order = np.argsort(labels, kind="stable")
    sizes = np.bincount(labels)
    starts = np.concatenate(([0], np.cumsum(sizes)[:-1]))

    out = []
    for size in np.unique(sizes):
        comps = np.flatnonzero(sizes == size)
        idx = order[starts[comps][:, None] + np.arange(size)]
        if size <= _BATCH_LIMIT:
            out.append(_dense(a[idx[:, :, None], idx[:, None, :]]).ravel())
        else:
            for sel in idx:
                out.append(_component(a[np.ix_(sel, sel)]))
    return np.sort(np.concatenate(out))
