"""Lie algebras given by rational structure constants.

Conventions used everywhere in the package:

* ``c[i, j, k]`` is the coefficient of ``x_k`` in ``[x_i, x_j]``.
* A linear map is a matrix acting on coordinate columns, so column ``j`` of
  ``M`` is the image of ``x_j``.  ``ad(x_i)[k, j] = c[i, j, k]``.
* The dual space uses the dual basis.  The dual of ``M`` is ``M.T`` and the
  coadjoint action is ``-ad.T``.
"""
from __future__ import annotations

import numpy as np

from . import exact as ex
from .errors import DimensionMismatch, InvalidLieAlgebra, InvalidRepresentation
from .kernels import jacobi_violation, matmul, pullback, push
from .report import CheckReport, combine


def tensor_report(name: str, T) -> CheckReport:
    """Pass iff ``T`` vanishes; otherwise the first nonzero index and its value."""
    idx = ex.first_nonzero(T)
    if idx is None:
        return CheckReport.ok(name)
    return CheckReport.fail(name, idx, np.asarray(T, dtype=object)[idx])


def check_antisymmetry(c) -> CheckReport:
    c = np.asarray(c, dtype=object)
    return tensor_report("antisymmetry", c + c.transpose(1, 0, 2))


def _constants(L):
    c = L.c if isinstance(L, LieAlgebra) else ex.qarray(L)
    if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
        raise DimensionMismatch(f"structure constants must be n x n x n, got {c.shape}")
    return c


def check_jacobi(L) -> CheckReport:
    """Antisymmetry, then the Jacobi sum over all index triples.

    Accepts a :class:`LieAlgebra` or a raw constants array, so that invalid
    data (which the constructor refuses) can still be diagnosed.
    """
    c = _constants(L)
    anti = check_antisymmetry(c)
    if not anti:
        return CheckReport.fail("jacobi", anti.witness, anti.residual, (anti,))
    hit = jacobi_violation(c)
    if hit is None:
        return CheckReport.ok("jacobi", (anti, CheckReport.ok("jacobi_identity")))
    i, j, k, l, v = hit
    leaf = CheckReport.fail("jacobi_identity", (i, j, k, l), v)
    return CheckReport.fail("jacobi", (i, j, k, l), v, (anti, leaf))


class LieAlgebra:
    """A finite-dimensional Lie algebra over the rationals.

    Construction validates antisymmetry and Jacobi and raises
    :class:`InvalidLieAlgebra` otherwise, so every instance is a genuine Lie
    algebra.  Instances are immutable.
    """

    __slots__ = ("_c", "_basis", "_name")

    def __init__(self, constants, basis=None, name: str = "", validate: bool = True):
        c = ex.qarray(constants)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise DimensionMismatch(f"structure constants must be n x n x n, got {c.shape}")
        n = c.shape[0]
        if basis is None:
            basis = [f"x{i}" for i in range(n)]
        basis = tuple(str(b) for b in basis)
        if len(basis) != n:
            raise DimensionMismatch(f"{len(basis)} basis names for dimension {n}")
        if len(set(basis)) != n:
            raise InvalidLieAlgebra("basis names must be distinct")
        if validate:
            rep = check_jacobi(c)
            if not rep:
                part = "antisymmetry" if not rep.details[0] else "Jacobi identity"
                raise InvalidLieAlgebra(
                    f"not a Lie algebra: {part} fails at {rep.witness} (residual {rep.residual})", rep
                )
        c.flags.writeable = False
        self._c = c
        self._basis = basis
        self._name = name

    @classmethod
    def from_brackets(cls, basis, brackets, name: str = "", validate: bool = True):
        """Build from ``(a, b, coeff, d)`` entries meaning ``[a, b] += coeff * d``.

        ``a``, ``b``, ``d`` are basis names or indices; antisymmetry is filled
        in, and each unordered pair may appear at most once.
        """
        basis = list(basis)
        n = len(basis)
        pos = {b: i for i, b in enumerate(basis)}

        def index(v):
            if isinstance(v, str):
                if v not in pos:
                    raise InvalidLieAlgebra(f"unknown basis element {v!r}")
                return pos[v]
            if isinstance(v, (int, np.integer)) and 0 <= v < n:
                return int(v)
            raise InvalidLieAlgebra(f"bad basis reference {v!r}")

        c = ex.zeros(n, n, n)
        seen: dict = {}
        for entry in brackets:
            a, b, coeff, d = entry
            i, j, k = index(a), index(b), index(d)
            if i == j:
                raise InvalidLieAlgebra(f"bracket of {basis[i]!r} with itself must vanish")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            key = (i, j, k)
            if key in seen:
                raise InvalidLieAlgebra(f"duplicate bracket entry for ({basis[i]}, {basis[j]}) -> {basis[k]}")
            seen[key] = True
            v = sign * ex.q(coeff)
            c[i, j, k] = v
            c[j, i, k] = -v
        return cls(c, basis, name, validate)

    @property
    def c(self) -> np.ndarray:
        return self._c

    @property
    def dim(self) -> int:
        return self._c.shape[0]

    @property
    def basis(self) -> tuple:
        return self._basis

    @property
    def name(self) -> str:
        return self._name

    def index(self, name: str) -> int:
        return self._basis.index(name)

    def bracket(self, x, y) -> np.ndarray:
        x = ex.qarray(x)
        y = ex.qarray(y)
        n = self.dim
        out = ex.zeros(n)
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                out = out + x[i] * y[j] * self._c[i, j]
        return out

    def ad(self, i: int) -> np.ndarray:
        return adjoint(self, i)

    def ad_vector(self, x) -> np.ndarray:
        """Matrix of ``ad_x`` for a coordinate vector ``x``."""
        x = ex.qarray(x)
        return np.tensordot(x, self._c, axes=(0, 0)).T.copy()

    def brackets(self):
        """Nonzero ``(i, j, coeff, k)`` with ``i < j``, in index order."""
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    v = self._c[i, j, k]
                    if v != 0:
                        yield i, j, v, k

    def is_abelian(self) -> bool:
        return ex.is_zero(self._c)

    def renamed(self, basis=None, name=None) -> "LieAlgebra":
        return LieAlgebra(self._c, basis if basis is not None else self._basis,
                          self._name if name is None else name, validate=False)

    def same_structure(self, other: "LieAlgebra") -> bool:
        return ex.equal(self._c, other._c)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self._basis == other._basis and self.same_structure(other)

    def __hash__(self):
        return hash((self._basis, tuple(self._c.flat)))

    def __repr__(self):
        label = self._name or "LieAlgebra"
        return f"<{label} dim={self.dim} basis={list(self._basis)}>"


def _check_index(L: LieAlgebra, i: int):
    if not (isinstance(i, (int, np.integer)) and 0 <= i < L.dim):
        raise IndexError(f"basis index {i} out of range for dimension {L.dim}")


def adjoint(L: LieAlgebra, i: int) -> np.ndarray:
    _check_index(L, i)
    return L.c[i].T.copy()


def coadjoint(L: LieAlgebra, i: int) -> np.ndarray:
    _check_index(L, i)
    return -L.c[i].copy()


def adjoint_matrices(L: LieAlgebra) -> list:
    return [adjoint(L, i) for i in range(L.dim)]


def coadjoint_matrices(L: LieAlgebra) -> list:
    return [coadjoint(L, i) for i in range(L.dim)]


def form_matrix(S, n: int) -> np.ndarray:
    S = ex.qarray(S)
    if S.shape != (n, n):
        raise DimensionMismatch(f"bilinear form must be {n} x {n}, got {S.shape}")
    return S


def invariance_tensor(L: LieAlgebra, S) -> np.ndarray:
    """``V[i, j, k] = S([x_i, x_j], x_k) + S(x_j, [x_i, x_k])``."""
    S = form_matrix(S, L.dim)
    first = push(S.T, L.c)
    second = push(S, L.c).transpose(0, 2, 1)
    return first + second


def check_symmetric(S) -> CheckReport:
    S = ex.qarray(S)
    return tensor_report("symmetric", S - S.T)


def check_nondegenerate(S) -> CheckReport:
    d = ex.det(S)
    if d == 0:
        return CheckReport.fail("nondegenerate", "det", d)
    return CheckReport.ok("nondegenerate")


def check_invariant_form(L: LieAlgebra, S) -> CheckReport:
    S = form_matrix(S, L.dim)
    return combine("invariant_form", [
        check_symmetric(S),
        check_nondegenerate(S),
        tensor_report("invariance", invariance_tensor(L, S)),
    ])


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, name: str = "") -> LieAlgebra:
    n1, n2 = L1.dim, L2.dim
    c = ex.zeros(n1 + n2, n1 + n2, n1 + n2)
    c[:n1, :n1, :n1] = L1.c
    c[n1:, n1:, n1:] = L2.c
    basis = list(L1.basis) + list(L2.basis)
    if len(set(basis)) != len(basis):
        basis = [f"{b}_1" for b in L1.basis] + [f"{b}_2" for b in L2.basis]
    return LieAlgebra(c, basis, name or f"{L1.name or 'g'}+{L2.name or 'h'}", validate=False)


def abelian(n: int, basis=None, name: str = "") -> LieAlgebra:
    return LieAlgebra(ex.zeros(n, n, n), basis, name or f"abelian({n})", validate=False)


def check_representation(L: LieAlgebra, mats) -> CheckReport:
    """``rho([x_i, x_j]) == [rho(x_i), rho(x_j)]``; witness ``(i, j, a, b)``."""
    mats = [ex.qarray(m) for m in mats]
    if len(mats) != L.dim:
        raise DimensionMismatch(f"{len(mats)} action matrices for dimension {L.dim}")
    if not mats:
        return CheckReport.ok("representation")
    m = mats[0].shape[0]
    for a in mats:
        if a.shape != (m, m):
            raise DimensionMismatch("action matrices must all be square of the same size")
    if m == 0:
        return CheckReport.ok("representation")
    stack = np.stack(mats)  # (n, m, m)
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = np.tensordot(L.c[i, j], stack, axes=(0, 0))
            rhs = matmul(mats[i], mats[j]) - matmul(mats[j], mats[i])
            idx = ex.first_nonzero(lhs - rhs)
            if idx is not None:
                return CheckReport.fail("representation", (i, j) + idx, (lhs - rhs)[idx])
    return CheckReport.ok("representation")


class Representation:
    """Action matrices ``rho(x_i)`` of ``L`` on an ``m``-dimensional space."""

    __slots__ = ("_algebra", "_mats", "_dim")

    def __init__(self, algebra: LieAlgebra, mats, dim: int | None = None, validate: bool = True):
        mats = [ex.qarray(m) for m in mats]
        if len(mats) != algebra.dim:
            raise DimensionMismatch(f"{len(mats)} action matrices for dimension {algebra.dim}")
        if dim is None:
            if not mats:
                raise DimensionMismatch("carrier dimension needed for a zero-dimensional algebra")
            dim = mats[0].shape[0]
        for a in mats:
            if a.shape != (dim, dim):
                raise DimensionMismatch(f"action matrix shape {a.shape}, expected {(dim, dim)}")
            a.flags.writeable = False
        if validate:
            rep = check_representation(algebra, mats)
            if not rep:
                raise InvalidRepresentation(f"not a representation at {rep.witness}", rep)
        self._algebra = algebra
        self._mats = tuple(mats)
        self._dim = dim

    @property
    def algebra(self) -> LieAlgebra:
        return self._algebra

    @property
    def mats(self) -> tuple:
        return self._mats

    @property
    def dim(self) -> int:
        return self._dim

    def __getitem__(self, i: int) -> np.ndarray:
        return self._mats[i]

    def of(self, x) -> np.ndarray:
        """``rho(x)`` for a coordinate vector ``x``."""
        x = ex.qarray(x)
        out = ex.zeros(self._dim, self._dim)
        for i, v in enumerate(x):
            if v != 0:
                out = out + v * self._mats[i]
        return out

    def tensor(self) -> np.ndarray:
        """``t[i, u, k]`` = coefficient of ``w_k`` in ``rho(x_i) w_u``."""
        if not self._mats:
            return ex.zeros(0, self._dim, self._dim)
        return np.stack([m.T for m in self._mats])

    @classmethod
    def zero(cls, algebra: LieAlgebra, dim: int) -> "Representation":
        return cls(algebra, [ex.zeros(dim, dim) for _ in range(algebra.dim)], dim, validate=False)

    @classmethod
    def adjoint(cls, algebra: LieAlgebra) -> "Representation":
        return cls(algebra, adjoint_matrices(algebra), algebra.dim, validate=False)

    @classmethod
    def coadjoint(cls, algebra: LieAlgebra) -> "Representation":
        return cls(algebra, coadjoint_matrices(algebra), algebra.dim, validate=False)


def check_homomorphism(src: LieAlgebra, dst: LieAlgebra, M, name: str = "homomorphism") -> CheckReport:
    """``M [x_i, x_j] == [M x_i, M x_j]`` for all basis pairs; witness ``(i, j, k)``."""
    M = ex.qarray(M)
    if M.shape != (dst.dim, src.dim):
        raise DimensionMismatch(f"map shape {M.shape}, expected {(dst.dim, src.dim)}")
    lhs = push(M, src.c)
    rhs = pullback(dst.c, M, M)
    return tensor_report(name, lhs - rhs)


def transport(L: LieAlgebra, P, basis=None, name: str = "") -> LieAlgebra:
    """Structure constants of ``L`` in the basis given by the columns of ``P``."""
    P = ex.qarray(P)
    Pinv = ex.inv(P)
    c = push(Pinv, pullback(L.c, P, P))
    return LieAlgebra(c, basis, name, validate=False)


__all__ = [
    "LieAlgebra", "Representation", "check_jacobi", "check_antisymmetry", "adjoint",
    "coadjoint", "adjoint_matrices", "coadjoint_matrices", "check_invariant_form",
    "invariance_tensor", "check_symmetric", "check_nondegenerate", "direct_sum", "abelian",
    "check_representation", "check_homomorphism", "transport", "tensor_report",
]
