"""Vectorised numpy versions of the commutator kernels in ``_kernels.pyx``."""

from __future__ import annotations

import numpy as np

# rows of ``a`` processed per numpy pass; bounds temporaries to ~chunk*n ints
_CHUNK_CELLS = 1 << 22


def commutator_hist_cayley(table: np.ndarray, inv: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    hist = np.zeros(n, dtype=np.int64)
    step = max(1, _CHUNK_CELLS // n)
    inv_b = inv[None, :]
    for start in range(0, n, step):
        a = np.arange(start, min(n, start + step))[:, None]
        ab = table[a, np.arange(n)[None, :]]
        aibi = table[inv[a], inv_b]
        hist += np.bincount(table[ab, aibi].ravel(), minlength=n)
    return hist


def _mm(add, mul, x, y):
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        add[mul[x0, y0], mul[x1, y2]],
        add[mul[x0, y1], mul[x1, y3]],
        add[mul[x2, y0], mul[x3, y2]],
        add[mul[x2, y1], mul[x3, y3]],
    )


def commutator_hist_sl2(elems, add, mul, neg, lookup, q: int) -> np.ndarray:
    n = elems.shape[0]
    hist = np.zeros(n, dtype=np.int64)
    step = max(1, _CHUNK_CELLS // n)
    B = tuple(elems[None, :, k] for k in range(4))
    Binv = (B[3], neg[B[1]], neg[B[2]], B[0])
    for start in range(0, n, step):
        blk = elems[start : start + step]
        A = tuple(blk[:, None, k] for k in range(4))
        Ainv = (A[3], neg[A[1]], neg[A[2]], A[0])
        c = _mm(add, mul, _mm(add, mul, _mm(add, mul, A, B), Ainv), Binv)
        code = ((c[0] * q + c[1]) * q + c[2]) * q + c[3]
        hist += np.bincount(lookup[code].ravel(), minlength=n)
    return hist
