"""Exact tensor contractions on rational arrays.

The public functions take and return ``object`` arrays of Fractions.  They
clear denominators, run an integer kernel, and divide back.  The integer
kernel is the compiled extension when it was built and the values fit in
int64; otherwise the pure-Python one.  Set ``ROTABAXTER_PURE_PYTHON=1`` to
force the fallback everywhere.
"""
from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

from . import _kernels_py
from .exact import from_int, scale_to_int

try:
    if os.environ.get("ROTABAXTER_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_I64_LIMIT = 2 ** 63


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def _maxabs(a) -> int:
    return max((abs(v) for v in a.flat), default=0)


def _pick(backend, bound):
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        if bound < _I64_LIMIT:
            return _ckernels, True
        return _kernels_py, False
    if backend == "python":
        return _kernels_py, False
    raise ValueError(f"unknown backend {backend!r}")


def _i64(a):
    return np.ascontiguousarray(np.asarray(a, dtype=np.int64))


def matmul(A, B, backend=None) -> np.ndarray:
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"matmul shape mismatch {A.shape} @ {B.shape}")
    if A.size == 0 or B.size == 0:
        return from_int(np.zeros((A.shape[0], B.shape[1]), dtype=object), 1)
    NA, da = scale_to_int(A)
    NB, db = scale_to_int(B)
    impl, native = _pick(backend, A.shape[1] * _maxabs(NA) * _maxabs(NB))
    out = impl.matmul(_i64(NA), _i64(NB)) if native else impl.matmul(NA, NB)
    return from_int(out, da * db)


def pullback(C, A, B, backend=None) -> np.ndarray:
    """``out[i, j, k] = sum_{a, b} A[a, i] B[b, j] C[a, b, k]``.

    With ``C`` the structure constants this is the bracket ``[A x_i, B x_j]``
    expanded in the basis.
    """
    C = np.asarray(C, dtype=object)
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    n, n2, m = C.shape
    if A.shape[0] != n or B.shape[0] != n2:
        raise ValueError(f"pullback shape mismatch C{C.shape} A{A.shape} B{B.shape}")
    if C.size == 0 or A.size == 0 or B.size == 0:
        return from_int(np.zeros((A.shape[1], B.shape[1], m), dtype=object), 1)
    NC, dc = scale_to_int(C)
    NA, da = scale_to_int(A)
    NB, db = scale_to_int(B)
    bound = n * n2 * _maxabs(NA) * _maxabs(NB) * _maxabs(NC)
    impl, native = _pick(backend, bound)
    if native:
        out = impl.pullback(_i64(NC), _i64(NA), _i64(NB))
    else:
        out = impl.pullback(NC, NA, NB)
    return from_int(out, dc * da * db)


def push(M, T) -> np.ndarray:
    """Apply ``M`` to the last index: ``out[i, j, k] = sum_l M[k, l] T[i, j, l]``."""
    T = np.asarray(T, dtype=object)
    p, qd, m = T.shape
    flat = matmul(T.reshape(p * qd, m), np.asarray(M, dtype=object).T)
    return flat.reshape(p, qd, -1)


def jacobi_violation(C, backend=None):
    """First ``(i, j, k, l, residual)`` with a nonzero Jacobi sum, else ``None``.

    Only ``i < j < k`` is scanned, so ``C`` must already be antisymmetric.
    """
    C = np.asarray(C, dtype=object)
    n = C.shape[0]
    if n < 3:
        return None
    NC, d = scale_to_int(C)
    impl, native = _pick(backend, 3 * n * _maxabs(NC) ** 2)
    hit = impl.jacobi_violation(_i64(NC)) if native else impl.jacobi_violation(NC)
    if hit is None:
        return None
    i, j, k, l, v = hit
    return (i, j, k, l, Fraction(int(v), d * d))


def einsum(spec: str, *arrays) -> np.ndarray:
    """Exact ``numpy.einsum`` over rational arrays.

    Denominators are cleared first; when the worst-case partial sum fits in
    int64 the contraction runs natively, otherwise on Python ints.
    """
    arrays = [np.asarray(a, dtype=object) for a in arrays]
    inputs, output = spec.replace(" ", "").split("->")
    sizes: dict = {}
    for labels, a in zip(inputs.split(","), arrays):
        for ch, s in zip(labels, a.shape):
            sizes[ch] = s
    out_shape = tuple(sizes[ch] for ch in output)
    if any(a.size == 0 for a in arrays):
        return from_int(np.zeros(out_shape, dtype=object), 1)
    terms = 1
    for ch, s in sizes.items():
        if ch not in output:
            terms *= s
    bound = terms
    d = 1
    ints = []
    for a in arrays:
        N, da = scale_to_int(a)
        bound *= _maxabs(N)
        d *= da
        ints.append(N)
    if bound < _I64_LIMIT:
        out = np.einsum(spec, *[_i64(N) for N in ints])
    else:
        out = np.einsum(spec, *ints)
    return from_int(np.asarray(out, dtype=object).reshape(out_shape), d)
