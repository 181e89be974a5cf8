"""Hot numeric kernels: batched complex matrix-vector products.

Both the Fourier-space projection multiply and the real-space medium multiply
reduce to ``out[p] = mats[p] @ vecs[p]`` over all grid points.  The numba
implementation parallelizes over points; a pure-numpy einsum path is kept as
fallback and can be forced with the environment flag ``CANONFORM_NUMBA=0``
(set it to ``1`` to require numba, anything else selects it when importable).

``python -m canonform.bench`` compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("CANONFORM_NUMBA", "auto").strip().lower()

try:  # pragma: no cover - exercised indirectly
    if _FLAG in ("0", "off", "false", "no"):
        raise ImportError("numba disabled by CANONFORM_NUMBA")
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False
    if _FLAG in ("1", "on", "true", "yes"):
        raise

_THREAD_HINT = os.environ.get("CANONFORM_THREADS", "").strip()
if HAVE_NUMBA and _THREAD_HINT:
    try:  # worker-count hint; ignore nonsense values
        import numba

        numba.set_num_threads(max(1, int(_THREAD_HINT)))
    except (ValueError, RuntimeError):
        pass


def batched_matvec_numpy(mats: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    """``out[p] = mats[p] @ vecs[p]`` with mats (P, n, n) and vecs (P, n)."""
    return np.einsum("pij,pj->pi", mats, vecs)


if HAVE_NUMBA:

    @njit(parallel=True, fastmath=False, cache=True)
    def _batched_matvec_numba(mats, vecs, out):  # pragma: no cover - jitted
        npts, n = vecs.shape
        for p in prange(npts):
            for i in range(n):
                acc = 0.0 + 0.0j
                for j in range(n):
                    acc += mats[p, i, j] * vecs[p, j]
                out[p, i] = acc

    def batched_matvec_numba(mats: np.ndarray, vecs: np.ndarray) -> np.ndarray:
        out = np.empty_like(vecs)
        _batched_matvec_numba(
            np.ascontiguousarray(mats), np.ascontiguousarray(vecs), out
        )
        return out

    batched_matvec = batched_matvec_numba
else:
    batched_matvec_numba = None
    batched_matvec = batched_matvec_numpy


def apply_pointwise_matrices(mats: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Apply per-point matrices ``(*shape, n, n)`` to fields ``(*shape, n)``."""
    shape = values.shape[:-1]
    n = values.shape[-1]
    flat = batched_matvec(
        mats.reshape(-1, n, n).astype(np.complex128, copy=False),
        values.reshape(-1, n).astype(np.complex128, copy=False),
    )
    return flat.reshape(*shape, n)
