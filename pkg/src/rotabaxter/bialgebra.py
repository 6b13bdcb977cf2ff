"""r-matrices, Lie bialgebras and their Rota-Baxter counterparts.

Index convention for ``r = sum r[i, j] x_i (x) x_j``: ``r_+`` sends the i-th
dual basis vector to ``sum_j r[i, j] x_j``, so its matrix is ``r.T``;
``r_-`` is ``-r_+^*`` with matrix ``-r``; and ``I = r_+ - r_-`` has matrix
``r + r.T``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import exact as ex
from .core import (
    LieAlgebra,
    Representation,
    check_homomorphism,
    tensor_report,
)
from .errors import (
    DimensionMismatch,
    InternalInconsistency,
    NotBialgebra,
    NotFactorizable,
    NotQuasitriangular,
    NotRotaBaxter,
    ZeroWeight,
)
from .kernels import einsum, matmul, pullback, push
from .matched import MatchedPair, check_matched_pair, double_bowtie
from .report import CheckReport, combine
from .rota_baxter import (
    QuadraticRBStructure,
    check_rota_baxter,
    iterated_descendent,
    tilde,
)


def dual_basis(L: LieAlgebra) -> list:
    """``x*`` for each basis name, or ``(x)*`` when that would clash (as it
    does for the dual of a double)."""
    names = [f"{b}*" for b in L.basis]
    if set(names) & set(L.basis):
        names = [f"({b})*" for b in L.basis]
    return names


def _rmat(r, n: int | None = None) -> np.ndarray:
    if isinstance(r, RMatrix):
        return r.r
    r = ex.qarray(r)
    if r.ndim != 2 or r.shape[0] != r.shape[1] or (n is not None and r.shape[0] != n):
        raise DimensionMismatch(f"r-matrix components must be {n} x {n}, got {r.shape}")
    return r


class RMatrix:
    """An element of ``g (x) g`` by its component matrix."""

    __slots__ = ("algebra", "r")

    def __init__(self, algebra: LieAlgebra, r):
        r = _rmat(r, algebra.dim)
        r.flags.writeable = False
        self.algebra, self.r = algebra, r

    @property
    def plus(self) -> np.ndarray:
        return r_plus(self.r)

    @property
    def minus(self) -> np.ndarray:
        return r_minus(self.r)

    @property
    def I(self) -> np.ndarray:
        return symmetric_part_I(self.r)


def r_plus(r) -> np.ndarray:
    return _rmat(r).T.copy()


def r_minus(r) -> np.ndarray:
    return -_rmat(r)


def symmetric_part_I(r) -> np.ndarray:
    r = _rmat(r)
    return r + r.T


def cybe_tensor(L: LieAlgebra, r) -> np.ndarray:
    """Components ``T[a, b, c]`` of ``[r12, r13] + [r12, r23] + [r13, r23]``."""
    R = _rmat(r, L.dim)
    C = L.c
    t1 = pullback(C, R, R).transpose(2, 0, 1)
    t2 = pullback(C, R.T, R).transpose(0, 2, 1)
    t3 = pullback(C, R.T, R.T)
    return t1 + t2 + t3


def check_cybe(L: LieAlgebra, r) -> CheckReport:
    return tensor_report("cybe", cybe_tensor(L, r))


def check_ad_invariance(L: LieAlgebra, r) -> CheckReport:
    """Invariance of the symmetric part, as a tensor in ``g (x) g`` and as the
    operator identity ``ad_x I + I ad_x^T = 0``; the two must agree."""
    M = symmetric_part_I(_rmat(r, L.dim))
    C = L.c
    # [m, a, b]: coefficient of x_a (x) x_b in [r + sigma(r), x_m]
    tensor = einsum("ima,ib->mab", C, M) + einsum("aj,jmb->mab", M, C)
    ad = np.stack([L.ad(m) for m in range(L.dim)]) if L.dim else ex.zeros(0, 0, 0)
    operator = einsum("mai,ib->mab", ad, M) + einsum("ai,mbi->mab", M, ad)
    if not ex.equal(tensor, -operator):
        raise InternalInconsistency("tensor and operator forms of ad-invariance disagree")
    return tensor_report("ad_invariance", operator)


def check_quasitriangular(L: LieAlgebra, r) -> CheckReport:
    return combine("quasitriangular", [check_cybe(L, r), check_ad_invariance(L, r)])


def _require_quasitriangular(L, r):
    rep = check_quasitriangular(L, r)
    if not rep:
        raise NotQuasitriangular(f"r is not quasitriangular: {rep.witness}", rep)


def dual_bracket_constants(L: LieAlgebra, r) -> np.ndarray:
    """``[a, b]_r = ad*_{r_+ a} b - ad*_{r_- b} a`` on dual basis vectors."""
    R = _rmat(r, L.dim)
    C = L.c
    x = einsum("im,mkj->ijk", R, C)
    y = einsum("mj,mki->ijk", R, C)
    return -x - y


def dual_bracket_r(L: LieAlgebra, r, name: str | None = None) -> LieAlgebra:
    _require_quasitriangular(L, r)
    gr = LieAlgebra(dual_bracket_constants(L, r), dual_basis(L),
                    name if name is not None else f"{L.name}*_r")
    for label, M in (("r_plus", r_plus(r)), ("r_minus", r_minus(r))):
        rep = check_homomorphism(gr, L, M, label)
        if not rep:
            raise InternalInconsistency(f"{label} is not a homomorphism at {rep.witness}")
    return gr


def is_factorizable(L: LieAlgebra, r) -> bool:
    _require_quasitriangular(L, r)
    return ex.det(symmetric_part_I(r)) != 0


def _require_factorizable(L, r, lam):
    if ex.q(lam) == 0:
        raise ZeroWeight("the weight must be nonzero")
    _require_quasitriangular(L, r)
    if ex.det(symmetric_part_I(r)) == 0:
        raise NotFactorizable("I singular: not factorizable")


def quadratic_rb_from_factorizable(L: LieAlgebra, r, lam, tilde_variant: bool = False) -> QuadraticRBStructure:
    """``B = lam r_- I^{-1}`` (or ``-lam r_+ I^{-1}``) with ``S(x, y) = <I^{-1} x, y>``."""
    _require_factorizable(L, r, lam)
    lam = ex.q(lam)
    R = _rmat(r, L.dim)
    Iinv = ex.inv(symmetric_part_I(R))
    if tilde_variant:
        B = -lam * matmul(r_plus(R), Iinv)
    else:
        B = lam * matmul(r_minus(R), Iinv)
    S = Iinv.T.copy()
    return QuadraticRBStructure(L, B, S, lam)


def factorizable_from_quadratic_rb(qrb: QuadraticRBStructure) -> RMatrix:
    """``r`` with ``r_+ = (1/lam)(B + lam) I_S`` where ``<I_S^{-1} x, y> = S(x, y)``."""
    lam = qrb.weight
    if lam == 0:
        raise ZeroWeight("the weight must be nonzero")
    L, B = qrb.algebra, qrb.B
    n = L.dim
    I_S = ex.inv(qrb.S.T)
    rp = matmul(B + lam * ex.eye(n), I_S) / lam
    r = rp.T.copy()
    rm = matmul(B, I_S) / lam
    if not ex.equal(r_minus(r), rm):
        raise InternalInconsistency("r_- differs from (1/lam) B I_S")
    if not ex.equal(symmetric_part_I(r), I_S):
        raise InternalInconsistency("r_+ - r_- differs from I_S")
    rep = check_quasitriangular(L, r)
    if not rep:
        raise InternalInconsistency(f"recovered r is not quasitriangular: {rep.witness}")
    if ex.det(I_S) == 0:
        raise InternalInconsistency("recovered r is not factorizable")
    return RMatrix(L, r)


class LieBialgebra:
    """A Lie algebra and a bracket on its dual space (dual basis)."""

    __slots__ = ("algebra", "dual")

    def __init__(self, algebra: LieAlgebra, dual: LieAlgebra, validate: bool = True):
        if dual.dim != algebra.dim:
            raise DimensionMismatch("dual algebra has a different dimension")
        self.algebra, self.dual = algebra, dual
        if validate:
            rep = check_lie_bialgebra(self)
            if not rep:
                raise NotBialgebra(f"cocycle condition fails: {rep.witness}", rep)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def matched_pair(self) -> MatchedPair:
        """``(g, g*; ad*, ad*)``: each algebra acts coadjointly on the other."""
        return MatchedPair(self.algebra, self.dual, Representation.coadjoint(self.algebra),
                           Representation.coadjoint(self.dual), validate=False)

    def flipped(self) -> "LieBialgebra":
        return LieBialgebra(self.dual, self.algebra, validate=False)


def check_lie_bialgebra(bi: LieBialgebra) -> CheckReport:
    mp = bi.matched_pair()
    rep = check_matched_pair(mp.g, mp.h, mp.rho, mp.mu)
    return CheckReport("lie_bialgebra", rep.passed, rep.witness, rep.residual, rep.details)


def quasitriangular_bialgebra(L: LieAlgebra, r) -> LieBialgebra:
    return LieBialgebra(L, dual_bracket_r(L, r))


def dual_bracket_I_constants(L: LieAlgebra, r, lam) -> np.ndarray:
    """``[a, b]_I = lam I^{-1} [(1/lam) I a, (1/lam) I b]``."""
    lam = ex.q(lam)
    Imat = symmetric_part_I(r)
    P = Imat / lam
    return push(ex.inv(P), pullback(L.c, P, P))


def bialgebra_iso_I(L: LieAlgebra, r, lam) -> CheckReport:
    """``(g_B, (g*, [.,.]_I))`` is a Lie bialgebra and ``(1/lam) I`` carries
    ``(g*_r, g)`` onto it."""
    _require_factorizable(L, r, lam)
    lam = ex.q(lam)
    qrb = quadratic_rb_from_factorizable(L, r, lam)
    gB = qrb.descendent()
    gI = LieAlgebra(dual_bracket_I_constants(L, r, lam), dual_basis(L), f"{L.name}*_I")
    gr = dual_bracket_r(L, r)
    P = symmetric_part_I(r) / lam
    return combine("bialgebra_iso_I", [
        _named(check_lie_bialgebra(LieBialgebra(gB, gI, validate=False)), "descendent_bialgebra"),
        _named(check_lie_bialgebra(LieBialgebra(gr, L, validate=False)), "dual_bialgebra"),
        check_homomorphism(gr, gB, P, "I_intertwines_r_and_B"),
        check_homomorphism(gI, L, P, "I_intertwines_I_and_g"),
    ])


def _named(rep: CheckReport, name: str) -> CheckReport:
    return CheckReport(name, rep.passed, rep.witness, rep.residual, rep.details)


class RBLieBialgebra:
    __slots__ = ("bialgebra", "B", "weight")

    def __init__(self, bialgebra: LieBialgebra, B, lam, validate: bool = True):
        B = ex.qarray(B)
        if B.shape != (bialgebra.dim, bialgebra.dim):
            raise DimensionMismatch("operator does not match the bialgebra")
        B.flags.writeable = False
        self.bialgebra, self.B, self.weight = bialgebra, B, ex.q(lam)
        if validate:
            rep = check_rb_bialgebra(self)
            if not rep:
                raise NotRotaBaxter(f"not a Rota-Baxter Lie bialgebra: {rep.witness}", rep)

    @property
    def algebra(self) -> LieAlgebra:
        return self.bialgebra.algebra

    @property
    def dual(self) -> LieAlgebra:
        return self.bialgebra.dual

    @property
    def dual_operator(self) -> np.ndarray:
        """``-lam id - B*`` on the dual."""
        return tilde(self.B.T, self.weight)


def check_rb_bialgebra(rbbi: RBLieBialgebra) -> CheckReport:
    return combine("rb_bialgebra", [
        _named(check_rota_baxter(rbbi.algebra, rbbi.B, rbbi.weight), "rb_operator"),
        _named(check_rota_baxter(rbbi.dual, rbbi.dual_operator, rbbi.weight), "rb_dual_operator"),
    ])


def swap_matrix(n: int) -> np.ndarray:
    """The block swap ``[[0, id], [id, 0]]`` on ``2n`` coordinates.

    It identifies the dual of ``g + g*`` (dual basis order: functionals on
    ``g`` first) with ``g + g*`` itself.
    """
    J = ex.zeros(2 * n, 2 * n)
    for i in range(n):
        J[i, n + i] = Fraction(1)
        J[n + i, i] = Fraction(1)
    return J


def double_algebra(bi: LieBialgebra, name: str | None = None) -> LieAlgebra:
    basis = list(bi.algebra.basis) + list(bi.dual.basis)
    d = double_bowtie(bi.matched_pair(), name=name or f"d({bi.algebra.name})")
    if list(d.basis) != basis:
        d = d.renamed(basis)
    return d


def canonical_r(n: int) -> np.ndarray:
    """``sum_i a_i (x) x_i`` on ``g + g*``, with ``a_i`` the dual basis."""
    r = ex.zeros(2 * n, 2 * n)
    for i in range(n):
        r[n + i, i] = Fraction(1)
    return r


def drinfeld_double(bi: LieBialgebra, lam):
    """``(d, r, RBLieBialgebra)`` for the double ``d = g |><| g*``.

    The operator is ``(x, a) -> -lam (0, a)``.
    """
    lam = ex.q(lam)
    if lam == 0:
        raise ZeroWeight("the weight must be nonzero")
    rep = check_lie_bialgebra(bi)
    if not rep:
        raise NotBialgebra(f"cocycle condition fails: {rep.witness}", rep)
    n = bi.dim
    d = double_algebra(bi)
    r = RMatrix(d, canonical_r(n))
    if not is_factorizable(d, r):
        raise InternalInconsistency("canonical r on the double is not factorizable")
    J = swap_matrix(n)
    if not ex.equal(matmul(r.I, J), ex.eye(2 * n)):
        raise InternalInconsistency("I is not the identity under the canonical identification")
    dstar = dual_bracket_r(d, r)
    expected = double_dual_expected(bi)
    if not ex.equal(dstar.c, expected):
        raise InternalInconsistency("dual of the double is not g + (g*)^op")
    B = ex.block_diag(ex.zeros(n, n), -lam * ex.eye(n))
    qrb = quadratic_rb_from_factorizable(d, r, lam)
    if not ex.equal(qrb.B, B):
        raise InternalInconsistency("operator from r differs from -lam (0, a)")
    rbbi = RBLieBialgebra(LieBialgebra(d, dstar, validate=False), B, lam)
    return d, r, rbbi


def double_dual_expected(bi: LieBialgebra) -> np.ndarray:
    """Constants of ``g* (opposite bracket) + g`` in the dual basis of the double.

    In dual-basis order the functionals on ``g`` come first, so this is the
    direct sum of ``g`` and the opposite of ``g*`` read through the swap.
    """
    n = bi.dim
    c = ex.zeros(2 * n, 2 * n, 2 * n)
    c[:n, :n, :n] = -bi.dual.c
    c[n:, n:, n:] = bi.algebra.c
    return c


def double_rb_bialgebra(rbbi: RBLieBialgebra) -> RBLieBialgebra:
    """Operator ``x + a -> Bx - lam a - B* a`` on the double, paired with the
    dual of the double coming from the canonical r-matrix."""
    bi, B, lam = rbbi.bialgebra, rbbi.B, rbbi.weight
    n = bi.dim
    d = double_algebra(bi)
    r = canonical_r(n)
    dstar = dual_bracket_r(d, r)
    calB = ex.block_diag(B, tilde(B.T, lam))
    J = swap_matrix(n)
    # the operator induced on the dual, read back on g + g* through the swap
    if not ex.equal(matmul(matmul(J, tilde(calB.T, lam)), J), calB):
        raise InternalInconsistency("-lam id - B* differs from B on the dual of the double")
    return RBLieBialgebra(LieBialgebra(d, dstar, validate=False), calB, lam)


def descendent_tower(L: LieAlgebra, r, lam, k: int) -> CheckReport:
    """For levels ``j = 0..k``: ``(1/lam) I`` is an isomorphism from the j-th
    descendent of ``g*_r`` (operator ``-lam id - B*``) onto the (j+1)-th
    descendent of ``g``, ``r_-`` maps level j onto level j of ``g``, and the
    squares and triangles of the diagram commute."""
    if k < 0:
        raise ValueError("k must be non-negative")
    qrb = quadratic_rb_from_factorizable(L, r, lam)
    lam = qrb.weight
    B = qrb.B
    Bt = tilde(B.T, lam)
    Imat = symmetric_part_I(r)
    P = Imat / lam
    rm = r_minus(r)
    gr = dual_bracket_r(L, r)
    gI = LieAlgebra(dual_bracket_I_constants(L, r, lam), dual_basis(L))
    if not ex.equal(Bt, lam * matmul(ex.inv(Imat), rm)):
        raise InternalInconsistency("-lam id - B* differs from lam I^{-1} r_-")
    parts = [
        check_homomorphism(gI, L, P, "level_I_iso"),
        check_homomorphism(gr, gI, Bt, "level_0_to_I"),
        tensor_report("triangle_commutes", matmul(B, P) - rm),
        tensor_report("square_commutes", matmul(P, Bt) - matmul(B, P)),
    ]
    top, bottom_prev = gr, L
    bottom = iterated_descendent(L, B, lam, 1)
    for j in range(k + 1):
        if j > 0:
            prev_top = top
            top = iterated_descendent(gr, Bt, lam, j)
            parts.append(check_homomorphism(top, prev_top, Bt, f"level_{j}_dual_step"))
            bottom_prev = bottom
            bottom = iterated_descendent(L, B, lam, j + 1)
        parts.append(check_homomorphism(top, bottom, P, f"level_{j}_iso"))
        parts.append(check_homomorphism(top, bottom_prev, rm, f"level_{j}_r_minus"))
        parts.append(check_homomorphism(bottom, bottom_prev, B, f"level_{j}_B_step"))
    return combine("descendent_tower", parts)
