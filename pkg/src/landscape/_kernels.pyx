# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops. Signatures mirror landscape._pykernels exactly."""

import numpy as np
from libc.stdint cimport int64_t


cdef void _butterfly(int64_t* row, Py_ssize_t size) noexcept nogil:
    cdef Py_ssize_t h = 1, i, j
    cdef int64_t u, v
    while h < size:
        i = 0
        while i < size:
            for j in range(i, i + h):
                u = row[j]
                v = row[j + h]
                row[j] = u + v
                row[j + h] = u - v
            i += 2 * h
        h *= 2


def fwht_rows(int64_t[:, ::1] a):
    """In-place unnormalized Walsh-Hadamard butterfly on every row."""
    cdef Py_ssize_t rows = a.shape[0], size = a.shape[1], r
    with nogil:
        for r in range(rows):
            _butterfly(&a[r, 0], size)
    return np.asarray(a)


def gwht_batch(const int64_t[:, ::1] values, int k):
    """Coordinate planes of sum_x zeta^f(x) (-1)^(u.x) for a batch of tables.

    Returns int64 array of shape (batch, h, 2^n), h = 2^(k-1).
    """
    cdef Py_ssize_t batch = values.shape[0], size = values.shape[1], b, x, j
    cdef int64_t h = 1 << (k - 1)
    cdef int64_t mask = (1 << k) - 1
    cdef int64_t e
    out_arr = np.zeros((batch, h, size), dtype=np.int64)
    cdef int64_t[:, :, ::1] out = out_arr
    with nogil:
        for b in range(batch):
            for x in range(size):
                e = values[b, x] & mask
                if e < h:
                    out[b, e, x] = 1
                else:
                    out[b, e - h, x] = -1
            for j in range(h):
                _butterfly(&out[b, j, 0], size)
    return out_arr


def second_derivative_counts(const int64_t[::1] values, int k, Py_ssize_t x):
    """Histogram over Z_{2^k} of D_b D_a f(x) for all pairs (a, b)."""
    cdef Py_ssize_t size = values.shape[0], a, b, xa
    cdef int64_t mask = (1 << k) - 1
    cdef int64_t base
    counts_arr = np.zeros(1 << k, dtype=np.int64)
    cdef int64_t[::1] counts = counts_arr
    with nogil:
        for a in range(size):
            xa = x ^ a
            base = values[x] - values[xa]
            for b in range(size):
                counts[(values[xa ^ b] - values[x ^ b] + base) & mask] += 1
    return counts_arr


def all_second_derivative_counts(const int64_t[::1] values, int k):
    cdef Py_ssize_t size = values.shape[0], x, a, b, xa
    cdef int64_t mask = (1 << k) - 1
    cdef int64_t base
    counts_arr = np.zeros((size, 1 << k), dtype=np.int64)
    cdef int64_t[:, ::1] counts = counts_arr
    with nogil:
        for x in range(size):
            for a in range(size):
                xa = x ^ a
                base = values[x] - values[xa]
                for b in range(size):
                    counts[x, (values[xa ^ b] - values[x ^ b] + base) & mask] += 1
    return counts_arr


def crosscorrelation_counts(const int64_t[::1] f, const int64_t[::1] g, int k):
    """counts[z, e] = #{x : f(x ^ z) - g(x) = e mod 2^k}."""
    cdef Py_ssize_t size = f.shape[0], z, x
    cdef int64_t mask = (1 << k) - 1
    counts_arr = np.zeros((size, 1 << k), dtype=np.int64)
    cdef int64_t[:, ::1] counts = counts_arr
    with nogil:
        for z in range(size):
            for x in range(size):
                counts[z, (f[x ^ z] - g[x]) & mask] += 1
    return counts_arr
