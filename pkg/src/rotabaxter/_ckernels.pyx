# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Same contracts as ``_kernels_py``.  Everything runs on int64; the caller
(``rotabaxter.kernels``) only dispatches here after proving that no partial
sum can overflow.
"""
import numpy as np

ctypedef long long i64


def matmul(const i64[:, ::1] A, const i64[:, ::1] B):
    cdef Py_ssize_t n = A.shape[0], k = A.shape[1], m = B.shape[1]
    cdef Py_ssize_t i, t, j
    cdef i64 av
    out = np.zeros((n, m), dtype=np.int64)
    cdef i64[:, ::1] o = out
    for i in range(n):
        for t in range(k):
            av = A[i, t]
            if av == 0:
                continue
            for j in range(m):
                o[i, j] += av * B[t, j]
    return out


def pullback(const i64[:, :, ::1] C, const i64[:, ::1] A, const i64[:, ::1] B):
    """``out[i, j, k] = sum_{a, b} A[a, i] * B[b, j] * C[a, b, k]``."""
    cdef Py_ssize_t n = C.shape[0], n2 = C.shape[1], m = C.shape[2]
    cdef Py_ssize_t p = A.shape[1], qd = B.shape[1]
    cdef Py_ssize_t a, b, i, j, k
    cdef i64 w, v
    T_arr = np.zeros((n, qd, m), dtype=np.int64)
    cdef i64[:, :, ::1] T = T_arr
    for a in range(n):
        for b in range(n2):
            for j in range(qd):
                w = B[b, j]
                if w == 0:
                    continue
                for k in range(m):
                    v = C[a, b, k]
                    if v != 0:
                        T[a, j, k] += w * v
    out = np.zeros((p, qd, m), dtype=np.int64)
    cdef i64[:, :, ::1] o = out
    for a in range(n):
        for i in range(p):
            w = A[a, i]
            if w == 0:
                continue
            for j in range(qd):
                for k in range(m):
                    o[i, j, k] += w * T[a, j, k]
    return out


def jacobi_violation(const i64[:, :, ::1] C):
    cdef Py_ssize_t n = C.shape[0]
    cdef Py_ssize_t i, j, k, l, mm, t
    cdef Py_ssize_t x, y, z
    cdef i64 v
    acc_arr = np.zeros(n, dtype=np.int64)
    cdef i64[::1] acc = acc_arr
    cdef Py_ssize_t[3][3] trip
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(n):
                    acc[l] = 0
                trip[0][0] = i; trip[0][1] = j; trip[0][2] = k
                trip[1][0] = j; trip[1][1] = k; trip[1][2] = i
                trip[2][0] = k; trip[2][1] = i; trip[2][2] = j
                for t in range(3):
                    x = trip[t][0]; y = trip[t][1]; z = trip[t][2]
                    for mm in range(n):
                        v = C[x, y, mm]
                        if v == 0:
                            continue
                        for l in range(n):
                            acc[l] += v * C[mm, z, l]
                for l in range(n):
                    if acc[l] != 0:
                        return (int(i), int(j), int(k), int(l), int(acc[l]))
    return None
