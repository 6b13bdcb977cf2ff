"""Matched pairs of Lie algebras and of Rota-Baxter Lie algebras.

A matched pair ``(g, h; rho, mu)`` has ``rho`` a representation of ``g`` on
``h`` and ``mu`` one of ``h`` on ``g``.  Its double lives on ``g + h`` (``g``
coordinates first) with

    [x + a, y + b] = ([x, y] + mu(a) y - mu(b) x) + ([a, b] + rho(x) b - rho(y) a).
"""
from __future__ import annotations

import numpy as np

from . import exact as ex
from .core import (
    LieAlgebra,
    Representation,
    check_homomorphism,
    check_nondegenerate,
    direct_sum,
    tensor_report,
)
from .errors import DimensionMismatch, InternalInconsistency, NotMatchedPair, ZeroWeight
from .kernels import einsum, pullback, push
from .report import CheckReport, combine
from .rota_baxter import (
    RotaBaxterStructure,
    check_rb_representation,
    check_rota_baxter,
    descendent,
    descendent_constants,
)


def _action_tensor(rep: Representation) -> np.ndarray:
    # t[i, u, k]: coefficient of w_k in rho(x_i) w_u
    return rep.tensor()


def mixed_residual(g: LieAlgebra, h: LieAlgebra, rho: Representation, mu: Representation) -> np.ndarray:
    """Residual of the first compatibility equation, indexed ``[i, a, b, k]``:

    rho(x)[a, b] - [rho(x) a, b] - [a, rho(x) b] - rho(mu(b) x) a + rho(mu(a) x) b
    """
    R = _action_tensor(rho)
    M = _action_tensor(mu)
    ch = h.c
    lhs = einsum("abl,ilk->iabk", ch, R)
    t1 = einsum("ial,lbk->iabk", R, ch)
    t2 = einsum("ibl,alk->iabk", R, ch)
    t3 = einsum("biq,qak->iabk", M, R)
    t4 = einsum("aiq,qbk->iabk", M, R)
    return lhs - t1 - t2 - t3 + t4


def _check_shapes(g, h, rho, mu):
    if rho.algebra.dim != g.dim or rho.dim != h.dim:
        raise DimensionMismatch(f"rho must act by {g.dim} matrices of size {h.dim}")
    if mu.algebra.dim != h.dim or mu.dim != g.dim:
        raise DimensionMismatch(f"mu must act by {h.dim} matrices of size {g.dim}")


def check_matched_pair(g: LieAlgebra, h: LieAlgebra, rho: Representation, mu: Representation) -> CheckReport:
    """Both compatibility equations; witnesses are ``(x, a, b, k)`` index tuples."""
    _check_shapes(g, h, rho, mu)
    return combine("matched_pair", [
        tensor_report("mp1", mixed_residual(g, h, rho, mu)),
        tensor_report("mp2", mixed_residual(h, g, mu, rho)),
    ])


class MatchedPair:
    __slots__ = ("g", "h", "rho", "mu")

    def __init__(self, g: LieAlgebra, h: LieAlgebra, rho, mu, validate: bool = True):
        if not isinstance(rho, Representation):
            rho = Representation(g, rho, h.dim, validate=validate)
        if not isinstance(mu, Representation):
            mu = Representation(h, mu, g.dim, validate=validate)
        _check_shapes(g, h, rho, mu)
        if validate:
            rep = check_matched_pair(g, h, rho, mu)
            if not rep:
                raise NotMatchedPair(f"not a matched pair: {rep.witness} (residual {rep.residual})", rep)
        self.g, self.h, self.rho, self.mu = g, h, rho, mu

    @classmethod
    def trivial(cls, g: LieAlgebra, h: LieAlgebra) -> "MatchedPair":
        return cls(g, h, Representation.zero(g, h.dim), Representation.zero(h, g.dim), validate=False)


def bowtie_constants(g, h, rho, mu) -> np.ndarray:
    n, m = g.dim, h.dim
    N = n + m
    c = ex.zeros(N, N, N)
    c[:n, :n, :n] = g.c
    c[n:, n:, n:] = h.c
    R = _action_tensor(rho)  # [i, a, k]
    M = _action_tensor(mu)   # [a, i, q]
    # [x_i, a] = rho(x_i) a - mu(a) x_i
    c[:n, n:, n:] = R
    c[:n, n:, :n] = -M.transpose(1, 0, 2)
    c[n:, :n, :] = -c[:n, n:, :].transpose(1, 0, 2)
    return c


def double_bowtie(mp: MatchedPair, name: str = "", validate: bool = True) -> LieAlgebra:
    basis = list(mp.g.basis) + list(mp.h.basis)
    if len(set(basis)) != len(basis):
        basis = [f"{b}_1" for b in mp.g.basis] + [f"{b}_2" for b in mp.h.basis]
    c = bowtie_constants(mp.g, mp.h, mp.rho, mp.mu)
    return LieAlgebra(c, basis, name or f"{mp.g.name}|><|{mp.h.name}", validate=validate)


def _require_weight(lam):
    if ex.q(lam) == 0:
        raise ZeroWeight("this construction needs a nonzero weight")


def mp_from_rb(rb: RotaBaxterStructure) -> MatchedPair:
    """``(g_B, g; rho, mu)`` with ``rho(a) x = B[x, a] - [x, Ba]`` and ``mu(x) a = [x, a]``."""
    _require_weight(rb.weight)
    L, B = rb.algebra, rb.B
    n = L.dim
    I = ex.eye(n)
    gB = descendent(L, B, rb.weight, name=f"{L.name}_B")
    t = (push(B, L.c) - pullback(L.c, I, B)).transpose(1, 0, 2)  # [a, p, k]
    rho = Representation(gB, [t[a].T.copy() for a in range(n)], n)
    mu = Representation.adjoint(L)
    return MatchedPair(gB, L, rho, mu)


def phi_matrix(rb: RotaBaxterStructure) -> np.ndarray:
    """``(a, x) -> (Ba + lam a + x, Ba + x)`` as a block matrix."""
    n, lam = rb.dim, rb.weight
    I = ex.eye(n)
    top = np.concatenate([rb.B + lam * I, I], axis=1)
    bottom = np.concatenate([rb.B, I], axis=1)
    return np.concatenate([top, bottom], axis=0)


def phi_inverse_matrix(rb: RotaBaxterStructure) -> np.ndarray:
    """``(x, y) -> (1/lam)(x - y, lam y - B(x - y))``."""
    n, lam = rb.dim, rb.weight
    I = ex.eye(n)
    top = np.concatenate([I, -I], axis=1)
    bottom = np.concatenate([-rb.B, lam * I + rb.B], axis=1)
    return np.concatenate([top, bottom], axis=0) / lam


def double_D(rb: RotaBaxterStructure, validate: bool = True):
    """The bracket on ``g + g`` (descendent copy first) and the map ``phi``.

    Returns ``(algebra, phi)``; ``phi`` is verified to be an isomorphism onto
    the direct sum ``g + g`` with the stated two-sided inverse.
    """
    _require_weight(rb.weight)
    L, B, lam = rb.algebra, rb.B, rb.weight
    n = L.dim
    I = ex.eye(n)
    N = 2 * n
    c = ex.zeros(N, N, N)
    c[:n, :n, :n] = descendent_constants(L.c, B, lam)
    c[n:, n:, n:] = L.c
    # [(0, x_p), (a, 0)] = ([x_p, a], [x_p, Ba] - B[x_p, a])
    c[n:, :n, :n] = L.c
    c[n:, :n, n:] = pullback(L.c, I, B) - push(B, L.c)
    c[:n, n:, :] = -c[n:, :n, :].transpose(1, 0, 2)
    basis = [f"{b}_B" for b in L.basis] + list(L.basis)
    D = LieAlgebra(c, basis, f"D({L.name})", validate=validate)
    phi = phi_matrix(rb)
    if validate:
        rep = check_double_D(rb, D, phi)
        if not rep:
            raise InternalInconsistency(f"phi is not an isomorphism: {rep.witness}")
    return D, phi


def check_double_D(rb: RotaBaxterStructure, D: LieAlgebra, phi) -> CheckReport:
    L = rb.algebra
    target = direct_sum(L, L)
    inv = phi_inverse_matrix(rb)
    I2 = ex.eye(2 * L.dim)
    return combine("double_D", [
        check_homomorphism(D, target, phi, "phi_homomorphism"),
        tensor_report("phi_inverse_right", phi @ inv - I2),
        tensor_report("phi_inverse_left", inv @ phi - I2),
    ])


class RBMatchedPair:
    __slots__ = ("mp", "B", "C", "weight")

    def __init__(self, mp: MatchedPair, B, C, lam, validate: bool = True):
        B = ex.qarray(B)
        C = ex.qarray(C)
        if B.shape != (mp.g.dim, mp.g.dim) or C.shape != (mp.h.dim, mp.h.dim):
            raise DimensionMismatch("operators do not match the algebras")
        self.mp, self.B, self.C, self.weight = mp, B, C, ex.q(lam)
        if validate:
            rep = check_rb_matched_pair(self)
            if not rep:
                raise NotMatchedPair(f"not a Rota-Baxter matched pair: {rep.witness}", rep)

    @property
    def operator(self) -> np.ndarray:
        return ex.block_diag(self.B, self.C)


def check_rb_matched_pair(rbmp: RBMatchedPair) -> CheckReport:
    """Operators are Rota-Baxter and each action is a Rota-Baxter representation.

    The same verdict is recomputed as ``B + C`` being Rota-Baxter on the
    double; a disagreement raises :class:`InternalInconsistency`.
    """
    mp, lam = rbmp.mp, rbmp.weight
    rb_g = RotaBaxterStructure(mp.g, rbmp.B, lam, validate=False)
    rb_h = RotaBaxterStructure(mp.h, rbmp.C, lam, validate=False)
    parts = [
        _rename(check_rota_baxter(mp.g, rbmp.B, lam), "rb_first"),
        _rename(check_rota_baxter(mp.h, rbmp.C, lam), "rb_second"),
        _rename(check_rb_representation(rb_g, rbmp.C, mp.rho), "rbmp1"),
        _rename(check_rb_representation(rb_h, rbmp.B, mp.mu), "rbmp2"),
    ]
    direct = combine("rb_matched_pair", parts)
    double = double_bowtie(mp, validate=False)
    other = check_rota_baxter(double, rbmp.operator, lam)
    if bool(other) != bool(direct):
        raise InternalInconsistency(
            "matched-pair conditions and the operator on the double disagree"
        )
    return direct


def _rename(rep: CheckReport, name: str) -> CheckReport:
    return CheckReport(name, rep.passed, rep.witness, rep.residual, rep.details)


def descendent_matched_pair(rbmp: RBMatchedPair) -> MatchedPair:
    """``(g_B, h_C; rho_(B,C), mu_(B,C))``; its double is checked to be the
    descendent of the original double under ``B + C``."""
    mp, B, C, lam = rbmp.mp, rbmp.B, rbmp.C, rbmp.weight
    gB = descendent(mp.g, B, lam, name=f"{mp.g.name}_B")
    hC = descendent(mp.h, C, lam, name=f"{mp.h.name}_C")
    rho = [mp.rho.of(B[:, i]) + mp.rho[i] @ C + lam * mp.rho[i] for i in range(mp.g.dim)]
    mu = [mp.mu.of(C[:, a]) + mp.mu[a] @ B + lam * mp.mu[a] for a in range(mp.h.dim)]
    out = MatchedPair(gB, hC, Representation(gB, rho, mp.h.dim), Representation(hC, mu, mp.g.dim))
    rep = check_descendent_double(rbmp, out)
    if not rep:
        raise InternalInconsistency(f"descendent double mismatch at {rep.witness}")
    return out


def check_descendent_double(rbmp: RBMatchedPair, dmp: MatchedPair | None = None) -> CheckReport:
    """Structure constants of the double of the descendent pair against the
    descendent of the double."""
    if dmp is None:
        dmp = descendent_matched_pair(rbmp)
    left = bowtie_constants(dmp.g, dmp.h, dmp.rho, dmp.mu)
    double = double_bowtie(rbmp.mp, validate=False)
    right = descendent_constants(double.c, rbmp.operator, rbmp.weight)
    return tensor_report("descendent_double", left - right)


def psi_diagram_check(L: LieAlgebra, r, lam) -> CheckReport:
    """Commutativity of ``phi o ((1/lam) I + id) == psi`` together with both
    maps being isomorphisms, where ``psi(a, x) = (r_+ a + x, r_- a + x)``."""
    from .bialgebra import (
        dual_bracket_r,
        quadratic_rb_from_factorizable,
        r_minus,
        r_plus,
        symmetric_part_I,
    )
    _require_weight(lam)
    lam = ex.q(lam)
    qrb = quadratic_rb_from_factorizable(L, r, lam)
    gr = dual_bracket_r(L, r)
    n = L.dim
    Id = ex.eye(n)
    # double of the bialgebra (g*_r, g)
    left = double_bowtie(MatchedPair(
        gr, L, Representation.coadjoint(gr), Representation.coadjoint(L), validate=False
    ))
    D, phi = double_D(qrb)
    Imat = symmetric_part_I(r)
    tilde_I = ex.block_diag(Imat / lam, Id)
    psi = np.concatenate([
        np.concatenate([r_plus(r), Id], axis=1),
        np.concatenate([r_minus(r), Id], axis=1),
    ], axis=0)
    return combine("psi_diagram", [
        check_homomorphism(left, D, tilde_I, "tilde_I_homomorphism"),
        _rename(check_nondegenerate(tilde_I), "tilde_I_invertible"),
        check_homomorphism(left, direct_sum(L, L), psi, "psi_homomorphism"),
        _rename(check_nondegenerate(psi), "psi_invertible"),
        tensor_report("commutes", phi @ tilde_I - psi),
    ])
