"""Pure-Python integer kernels.

Reference implementations of the routines in ``_ckernels.pyx``.  Inputs are
integer arrays (any numpy dtype, including ``object`` holding Python ints);
arithmetic is done on Python ints, so there is no overflow.  Zero entries are
skipped, which matters because structure constants are very sparse.
"""
import numpy as np


def matmul(A, B):
    a = np.asarray(A).tolist()
    b = np.asarray(B).tolist()
    n, k = np.shape(A)
    m = np.shape(B)[1]
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        row = out[i]
        for t, av in enumerate(a[i]):
            if av:
                brow = b[t]
                for j in range(m):
                    bv = brow[j]
                    if bv:
                        row[j] += av * bv
    res = np.empty((n, m), dtype=object)
    for i in range(n):
        for j in range(m):
            res[i, j] = out[i][j]
    return res


def pullback(C, A, B):
    """``out[i, j, k] = sum_{a, b} A[a, i] * B[b, j] * C[a, b, k]``."""
    n, n2, m = np.shape(C)
    p = np.shape(A)[1]
    qd = np.shape(B)[1]
    c = np.asarray(C).tolist()
    a = np.asarray(A).tolist()
    b = np.asarray(B).tolist()
    # stage 1: T[a][j][k] = sum_b B[b, j] C[a, b, k]
    T = [[[0] * m for _ in range(qd)] for _ in range(n)]
    for ai in range(n):
        ca = c[ai]
        Ta = T[ai]
        for bi in range(n2):
            cab = ca[bi]
            nzk = [(k, v) for k, v in enumerate(cab) if v]
            if not nzk:
                continue
            brow = b[bi]
            for j in range(qd):
                w = brow[j]
                if w:
                    Taj = Ta[j]
                    for k, v in nzk:
                        Taj[k] += w * v
    out = np.empty((p, qd, m), dtype=object)
    acc = [[[0] * m for _ in range(qd)] for _ in range(p)]
    for ai in range(n):
        Ta = T[ai]
        nz = [(j, k, v) for j in range(qd) for k, v in enumerate(Ta[j]) if v]
        if not nz:
            continue
        arow = a[ai]
        for i in range(p):
            w = arow[i]
            if w:
                acci = acc[i]
                for j, k, v in nz:
                    acci[j][k] += w * v
    for i in range(p):
        for j in range(qd):
            for k in range(m):
                out[i, j, k] = acc[i][j][k]
    return out


def jacobi_violation(C):
    """First ``(i, j, k, l, value)`` with ``i < j < k`` whose Jacobi sum is nonzero.

    Assumes antisymmetric constants, so ordered triples are enough.
    """
    n = np.shape(C)[0]
    c = np.asarray(C).tolist()
    # sparse rows: nz[i][j] = [(m, c[i][j][m]) ...]
    nz = [[[(mm, v) for mm, v in enumerate(c[i][j]) if v] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = [0] * n
                for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                    for mm, v in nz[x][y]:
                        for l, w in nz[mm][z]:
                            acc[l] += v * w
                for l in range(n):
                    if acc[l]:
                        return (i, j, k, l, acc[l])
    return None
