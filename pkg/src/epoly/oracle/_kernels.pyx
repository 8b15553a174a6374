# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled commutator-histogram kernels.

Both functions return ``hist`` with ``hist[k] = #{(a, b) : a b a^-1 b^-1 = k}``.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def commutator_hist_cayley(const int[:, ::1] table, const int[::1] inv):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t a, b
    cdef int ab, aibi
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] hist = out
    with nogil:
        for a in range(n):
            for b in range(n):
                ab = table[a, b]
                aibi = table[inv[a], inv[b]]
                hist[table[ab, aibi]] += 1
    return out


cdef inline void _mm(const int[:, ::1] add, const int[:, ::1] mul,
                     int a0, int a1, int a2, int a3,
                     int b0, int b1, int b2, int b3,
                     int* r) noexcept nogil:
    r[0] = add[mul[a0, b0], mul[a1, b2]]
    r[1] = add[mul[a0, b1], mul[a1, b3]]
    r[2] = add[mul[a2, b0], mul[a3, b2]]
    r[3] = add[mul[a2, b1], mul[a3, b3]]


def commutator_hist_sl2(const int[:, ::1] elems, const int[:, ::1] add,
                        const int[:, ::1] mul, const int[::1] neg,
                        const int[::1] lookup, int q):
    """Histogram over SL(2, F_q) using 2x2 matrix arithmetic on field tables.

    ``elems[i] = (a, b, c, d)`` for the matrix ``[[a, b], [c, d]]``; ``lookup``
    maps ``((a*q + b)*q + c)*q + d`` back to the element index.
    """
    cdef Py_ssize_t n = elems.shape[0]
    cdef Py_ssize_t i, j
    cdef int A0, A1, A2, A3, B0, B1, B2, B3
    cdef int ab[4]
    cdef int abai[4]
    cdef int comm[4]
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] hist = out
    with nogil:
        for i in range(n):
            A0 = elems[i, 0]; A1 = elems[i, 1]; A2 = elems[i, 2]; A3 = elems[i, 3]
            for j in range(n):
                B0 = elems[j, 0]; B1 = elems[j, 1]; B2 = elems[j, 2]; B3 = elems[j, 3]
                _mm(add, mul, A0, A1, A2, A3, B0, B1, B2, B3, ab)
                # A^-1 = [[d, -b], [-c, a]]
                _mm(add, mul, ab[0], ab[1], ab[2], ab[3], A3, neg[A1], neg[A2], A0, abai)
                _mm(add, mul, abai[0], abai[1], abai[2], abai[3], B3, neg[B1], neg[B2], B0, comm)
                hist[lookup[((comm[0] * q + comm[1]) * q + comm[2]) * q + comm[3]]] += 1
    return out
