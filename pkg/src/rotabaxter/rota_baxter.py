"""Rota-Baxter operators of arbitrary weight on Lie algebras.

A weight-``lam`` operator ``B`` satisfies

    [Bx, By] = B([Bx, y] + [x, By] + lam [x, y])

and induces the descendent bracket ``[x, y]_B = [Bx, y] + [x, By] + lam [x, y]``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import exact as ex
from .core import (
    LieAlgebra,
    Representation,
    check_nondegenerate,
    check_representation,
    check_symmetric,
    coadjoint_matrices,
    invariance_tensor,
    tensor_report,
)
from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    InvalidRepresentation,
    NotQuadratic,
    NotRotaBaxter,
    ZeroWeight,
)
from .kernels import matmul, pullback, push
from .report import CheckReport, combine


def operator_matrix(B, n: int) -> np.ndarray:
    B = ex.qarray(B)
    if B.shape != (n, n):
        raise DimensionMismatch(f"operator must be {n} x {n}, got {B.shape}")
    return B


def pair_report(name: str, T) -> CheckReport:
    """Like ``tensor_report`` for an ``(i, j, k)`` tensor, but the witness is the
    basis pair ``(i, j)`` and the residual its whole coordinate vector."""
    idx = ex.first_nonzero(T)
    if idx is None:
        return CheckReport.ok(name)
    i, j = idx[0], idx[1]
    return CheckReport.fail(name, (i, j), list(np.asarray(T, dtype=object)[i, j]))


def descendent_constants(c, B, lam) -> np.ndarray:
    n = c.shape[0]
    I = ex.eye(n)
    return pullback(c, B, I) + pullback(c, I, B) + ex.q(lam) * c


def rb_residual(L: LieAlgebra, B, lam) -> np.ndarray:
    B = operator_matrix(B, L.dim)
    return pullback(L.c, B, B) - push(B, descendent_constants(L.c, B, lam))


def check_rota_baxter(L: LieAlgebra, B, lam) -> CheckReport:
    return pair_report("rota_baxter", rb_residual(L, B, lam))


def _require_rb(L, B, lam):
    rep = check_rota_baxter(L, B, lam)
    if not rep:
        raise NotRotaBaxter(
            f"not a Rota-Baxter operator of weight {ex.q(lam)}: identity fails on pair {rep.witness}", rep
        )


def descendent(L: LieAlgebra, B, lam, name: str | None = None) -> LieAlgebra:
    B = operator_matrix(B, L.dim)
    _require_rb(L, B, lam)
    c = descendent_constants(L.c, B, lam)
    return LieAlgebra(c, L.basis, name if name is not None else f"{L.name}_B")


def iterated_descendent(L: LieAlgebra, B, lam, k: int) -> LieAlgebra:
    if k < 0:
        raise ValueError("k must be non-negative")
    out = L
    for level in range(k):
        out = descendent(out, B, lam, name=f"{L.name}_B^{level + 1}")
    return out


def tilde(B, lam) -> np.ndarray:
    B = ex.qarray(B)
    return -ex.q(lam) * ex.eye(B.shape[0]) - B


def form_adjoint(B, S) -> np.ndarray:
    """``B*`` with ``S(B* x, y) == S(x, B y)``."""
    B = ex.qarray(B)
    S = ex.qarray(S)
    return matmul(matmul(ex.inv(S).T, B.T), S.T)


def check_quadratic(L: LieAlgebra, B, S, lam) -> CheckReport:
    """Quadratic compatibility, checked as the bilinear identity and as
    ``B + B* == -lam id``; the two routes must agree."""
    n = L.dim
    B = operator_matrix(B, n)
    S = ex.qarray(S)
    if S.shape != (n, n):
        raise DimensionMismatch(f"form must be {n} x {n}, got {S.shape}")
    lam = ex.q(lam)
    sym = check_symmetric(S)
    nondeg = check_nondegenerate(S)
    inv_ = tensor_report("invariance", invariance_tensor(L, S))
    bilinear = tensor_report("compatibility", matmul(S, B) + matmul(B.T, S) + lam * S)
    parts = [sym, nondeg, inv_, bilinear]
    if nondeg:
        adj = tensor_report("adjoint_sum", B + form_adjoint(B, S) + lam * ex.eye(n))
        if sym and bool(adj) != bool(bilinear):
            raise InternalInconsistency("bilinear and adjoint forms of compatibility disagree")
        parts.append(adj)
    return combine("quadratic", parts)


class RotaBaxterStructure:
    """``(L, B, lam)`` with ``B`` verified to be Rota-Baxter of weight ``lam``."""

    __slots__ = ("_L", "_B", "_lam")

    def __init__(self, algebra: LieAlgebra, B, lam, validate: bool = True):
        B = operator_matrix(B, algebra.dim)
        lam = ex.q(lam)
        if validate:
            _require_rb(algebra, B, lam)
        B.flags.writeable = False
        self._L, self._B, self._lam = algebra, B, lam

    @property
    def algebra(self) -> LieAlgebra:
        return self._L

    @property
    def B(self) -> np.ndarray:
        return self._B

    @property
    def weight(self) -> Fraction:
        return self._lam

    @property
    def dim(self) -> int:
        return self._L.dim

    def descendent(self) -> LieAlgebra:
        return descendent(self._L, self._B, self._lam)

    def __repr__(self):
        return f"<RotaBaxterStructure {self._L.name or 'g'} weight={self._lam}>"


class QuadraticRBStructure(RotaBaxterStructure):
    """A Rota-Baxter structure with a compatible invariant form ``S``."""

    __slots__ = ("_S",)

    def __init__(self, algebra: LieAlgebra, B, S, lam, validate: bool = True):
        super().__init__(algebra, B, lam, validate)
        S = ex.qarray(S)
        if validate:
            rep = check_quadratic(algebra, self.B, S, lam)
            if not rep:
                raise NotQuadratic(f"not a quadratic Rota-Baxter structure: {rep.witness}", rep)
        S.flags.writeable = False
        self._S = S

    @property
    def S(self) -> np.ndarray:
        return self._S

    def __repr__(self):
        return f"<QuadraticRBStructure {self.algebra.name or 'g'} weight={self.weight}>"


def rb_representation_residuals(rb: RotaBaxterStructure, T, rho: Representation):
    lam = rb.weight
    T = ex.qarray(T)
    for i in range(rb.dim):
        bx = rho.of(rb.B[:, i])
        lhs = matmul(bx, T)
        rhs = matmul(T, bx + matmul(rho[i], T) + lam * rho[i])
        yield i, lhs - rhs


def check_rb_representation(rb: RotaBaxterStructure, T, rho: Representation) -> CheckReport:
    """``rho(Bx) T == T (rho(Bx) + rho(x) T + lam rho(x))`` for every basis ``x``."""
    T = ex.qarray(T)
    if rho.algebra.dim != rb.dim:
        raise DimensionMismatch("representation is of a different algebra")
    if T.shape != (rho.dim, rho.dim):
        raise DimensionMismatch(f"T must be {rho.dim} x {rho.dim}, got {T.shape}")
    for i, R in rb_representation_residuals(rb, T, rho):
        idx = ex.first_nonzero(R)
        if idx is not None:
            return CheckReport.fail("rb_representation", (i,) + idx, R[idx])
    return CheckReport.ok("rb_representation")


class RBRepresentation:
    __slots__ = ("rb", "T", "rho")

    def __init__(self, rb: RotaBaxterStructure, T, rho: Representation, validate: bool = True):
        T = ex.qarray(T)
        if validate:
            rep = check_representation(rho.algebra, rho.mats) if rho.dim else CheckReport.ok("representation")
            if not rep:
                raise InvalidRepresentation(f"rho is not a representation at {rep.witness}", rep)
            rep = check_rb_representation(rb, T, rho)
            if not rep:
                raise InvalidRepresentation(f"not a Rota-Baxter representation at {rep.witness}", rep)
        T.flags.writeable = False
        self.rb, self.T, self.rho = rb, T, rho

    @property
    def dim(self) -> int:
        return self.rho.dim


def adjoint_rep(rb: RotaBaxterStructure) -> RBRepresentation:
    return RBRepresentation(rb, rb.B, Representation.adjoint(rb.algebra))


def coadjoint_rep(rb: RotaBaxterStructure) -> RBRepresentation:
    """``(g*, -lam id - B*, ad*)``."""
    return RBRepresentation(rb, tilde(rb.B.T, rb.weight), Representation.coadjoint(rb.algebra))


def sharp_isomorphism(qrb: QuadraticRBStructure) -> np.ndarray:
    """Matrix of ``x -> S(x, .)`` from ``g`` to ``g*``, after checking that it
    intertwines ``(ad, B)`` with ``(ad*, -lam id - B*)``."""
    L = qrb.algebra
    M = qrb.S.T.copy()
    coad = coadjoint_matrices(L)
    for i in range(L.dim):
        R = matmul(M, L.ad(i)) - matmul(coad[i], M)
        if not ex.is_zero(R):
            raise InternalInconsistency(f"S-sharp does not intertwine ad at basis {i}")
    R = matmul(M, qrb.B) - matmul(tilde(qrb.B.T, qrb.weight), M)
    if not ex.is_zero(R):
        raise InternalInconsistency("S-sharp does not intertwine the operators")
    return M


def semidirect_product(rep: RBRepresentation, w_names=None) -> RotaBaxterStructure:
    """``g`` acting on the abelian carrier ``W``, with operator ``B + T``."""
    rb, rho = rep.rb, rep.rho
    L = rb.algebra
    n, m = L.dim, rho.dim
    if m == 0:
        return rb
    N = n + m
    c = ex.zeros(N, N, N)
    c[:n, :n, :n] = L.c
    for i in range(n):
        # [x_i, w_u] = rho(x_i) w_u
        c[i, n:, n:] = rho[i].T
        c[n:, i, n:] = -rho[i].T
    if w_names is None:
        w_names = [f"w{u}" for u in range(m)]
    basis = list(L.basis) + list(w_names)
    algebra = LieAlgebra(c, basis, f"{L.name}|x W")
    op = ex.block_diag(rb.B, rep.T)
    return RotaBaxterStructure(algebra, op, rb.weight)


def factorize_element(rb: RotaBaxterStructure, x):
    """``(x_plus, x_minus)`` with ``x == x_plus - x_minus``."""
    lam = rb.weight
    if lam == 0:
        raise ZeroWeight("element factorization needs a nonzero weight")
    x = ex.qarray(x)
    bx = matmul(rb.B, x.reshape(-1, 1)).reshape(-1)
    x_plus = (bx + lam * x) / lam
    x_minus = bx / lam
    assert ex.equal(x_plus - x_minus, x)
    return x_plus, x_minus


def modified_ybe_residual(L: LieAlgebra, R) -> np.ndarray:
    """``[Rx, Ry] - R([Rx, y] + [x, Ry]) + [x, y]`` on basis pairs."""
    R = operator_matrix(R, L.dim)
    I = ex.eye(L.dim)
    return pullback(L.c, R, R) - push(R, pullback(L.c, R, I) + pullback(L.c, I, R)) + L.c


def modified_ybe_check(L: LieAlgebra, B) -> CheckReport:
    """Modified Yang-Baxter equation for ``R = id + 2B``.

    Cross-checked against the weight-one Rota-Baxter identity, which it is
    equivalent to (the residual is exactly four times the Rota-Baxter one).
    """
    B = operator_matrix(B, L.dim)
    R = ex.eye(L.dim) + 2 * B
    res = modified_ybe_residual(L, R)
    rep = pair_report("modified_ybe", res)
    if not ex.equal(res, 4 * rb_residual(L, B, 1)):
        raise InternalInconsistency("modified Yang-Baxter residual is not 4x the Rota-Baxter residual")
    return rep
