"""Exact rational scalars, vectors and matrices.

Every exact quantity in the package is a numpy ``object`` array whose
entries are :class:`fractions.Fraction`.  Dense linear algebra that needs
elimination (determinant, inverse, solve) is delegated to sympy's
``DomainMatrix`` over ``QQ``.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational

import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def q(value) -> Fraction:
    """Coerce an int, a Fraction or a rational string such as ``"-3/4"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (np.integer,)):
        return Fraction(int(value))
    raise TypeError(f"cannot use {value!r} ({type(value).__name__}) as an exact scalar")


def qarray(data, shape=None) -> np.ndarray:
    arr = np.asarray(data, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    out = np.empty(arr.shape, dtype=object)
    flat_in, flat_out = arr.reshape(-1), out.reshape(-1)
    for idx, v in enumerate(flat_in):
        flat_out[idx] = q(v)
    return out


def zeros(*shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(Fraction(0))
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def diag(entries) -> np.ndarray:
    entries = [q(e) for e in entries]
    out = zeros(len(entries), len(entries))
    for i, e in enumerate(entries):
        out[i, i] = e
    return out


def unit(n: int, i: int) -> np.ndarray:
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def block_diag(*blocks) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def is_zero(a) -> bool:
    return not np.any(np.asarray(a, dtype=object) != 0)


def equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and not np.any(a != b)


def first_nonzero(a):
    """Index tuple of the first nonzero entry in C order, or ``None``."""
    nz = np.argwhere(np.asarray(a, dtype=object) != 0)
    if len(nz) == 0:
        return None
    return tuple(int(i) for i in nz[0])


def scale_to_int(a) -> tuple[np.ndarray, int]:
    """Return ``(N, d)`` with ``a == N / d``, ``N`` an object array of Python ints."""
    a = np.asarray(a, dtype=object)
    d = 1
    for v in a.flat:
        d = lcm(d, v.denominator)
    out = np.empty(a.shape, dtype=object)
    fo = out.reshape(-1)
    for idx, v in enumerate(a.flat):
        fo[idx] = v.numerator * (d // v.denominator)
    return out, d


def from_int(a, d: int) -> np.ndarray:
    a = np.asarray(a)
    out = np.empty(a.shape, dtype=object)
    fo = out.reshape(-1)
    for idx, v in enumerate(a.flat):
        fo[idx] = Fraction(int(v), d)
    return out


def _to_domain(m) -> DomainMatrix:
    m = np.asarray(m, dtype=object)
    rows = [[QQ(v.numerator, v.denominator) for v in row] for row in m]
    return DomainMatrix(rows, m.shape, QQ)


def _from_domain(dm: DomainMatrix) -> np.ndarray:
    rows = dm.to_list()
    out = zeros(*dm.shape)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = Fraction(int(v.numerator), int(v.denominator))
    return out


def det(m) -> Fraction:
    m = np.asarray(m, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"determinant of a non-square matrix {m.shape}")
    if m.shape[0] == 0:
        return Fraction(1)
    v = _to_domain(m).det()
    return Fraction(int(v.numerator), int(v.denominator))


def inv(m) -> np.ndarray:
    """Exact inverse; raises ``ZeroDivisionError`` on a singular matrix."""
    m = np.asarray(m, dtype=object)
    if m.shape[0] == 0:
        return zeros(0, 0)
    if det(m) == 0:
        raise ZeroDivisionError("matrix is singular")
    return _from_domain(_to_domain(m).inv())


def rank(m) -> int:
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0
    return _to_domain(m).rank()


def solve(m, rhs) -> np.ndarray | None:
    """Exact solution ``x`` of ``m @ x == rhs`` (columns of ``rhs``), or ``None``.

    ``m`` may be rectangular with full column rank; an inconsistent system
    returns ``None``.
    """
    m = np.asarray(m, dtype=object)
    rhs = np.asarray(rhs, dtype=object)
    vec = rhs.ndim == 1
    if vec:
        rhs = rhs.reshape(-1, 1)
    rows, cols = m.shape
    aug = np.concatenate([m, rhs], axis=1)
    rref, pivots = _to_domain(aug).rref()
    rref = _from_domain(rref)
    if any(p >= cols for p in pivots):
        return None
    if len(pivots) != cols:
        raise ValueError("coefficient matrix does not have full column rank")
    x = rref[:cols, cols:]
    return x.reshape(-1) if vec else x
