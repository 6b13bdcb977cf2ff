"""Manin triples of Lie algebras and of Rota-Baxter Lie algebras.

Subalgebras are given by injection matrices whose columns are ambient
coordinate vectors.  The adapted basis lists the first subalgebra's columns,
then the second's; the bialgebra read off from a triple lives in that basis.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import exact as ex
from .bialgebra import (
    LieBialgebra,
    RBLieBialgebra,
    double_algebra,
    swap_matrix,
)
from .core import LieAlgebra, check_invariant_form, direct_sum, tensor_report
from .errors import DimensionMismatch, NotManinTriple
from .kernels import matmul, pullback, push
from .report import CheckReport, combine
from .rota_baxter import check_quadratic, tilde


class ManinTriple:
    __slots__ = ("ambient", "S", "Pg", "Ph", "_adapted")

    def __init__(self, ambient: LieAlgebra, S, Pg, Ph, validate: bool = True):
        S, Pg, Ph = ex.qarray(S), ex.qarray(Pg), ex.qarray(Ph)
        N = ambient.dim
        if S.shape != (N, N):
            raise DimensionMismatch(f"form must be {N} x {N}, got {S.shape}")
        if Pg.ndim != 2 or Ph.ndim != 2 or Pg.shape[0] != N or Ph.shape[0] != N:
            raise DimensionMismatch("injections must have one row per ambient coordinate")
        for a in (S, Pg, Ph):
            a.flags.writeable = False
        self.ambient, self.S, self.Pg, self.Ph = ambient, S, Pg, Ph
        self._adapted = None
        if validate:
            rep = check_manin_triple(self)
            if not rep:
                raise NotManinTriple(f"not a Manin triple: {rep.witness}", rep)

    @property
    def P(self) -> np.ndarray:
        return np.concatenate([self.Pg, self.Ph], axis=1)

    @property
    def p(self) -> int:
        return self.Pg.shape[1]

    def adapted_constants(self) -> np.ndarray:
        """Ambient bracket in the adapted basis."""
        if self._adapted is None:
            P = self.P
            self._adapted = push(ex.inv(P), pullback(self.ambient.c, P, P))
        return self._adapted

    def first(self, basis=None, name: str = "g") -> LieAlgebra:
        p = self.p
        return LieAlgebra(self.adapted_constants()[:p, :p, :p], basis or _names(self.ambient, self.Pg, "g"), name)

    def second(self, basis=None, name: str = "h") -> LieAlgebra:
        p = self.p
        return LieAlgebra(self.adapted_constants()[p:, p:, p:], basis or _names(self.ambient, self.Ph, "h"), name)


def _names(L: LieAlgebra, P, prefix: str) -> list:
    """Ambient names when every column is a coordinate vector, else generic ones."""
    out = []
    for j in range(P.shape[1]):
        col = P[:, j]
        nz = [i for i in range(len(col)) if col[i] != 0]
        if len(nz) == 1 and col[nz[0]] == 1:
            out.append(L.basis[nz[0]])
        else:
            return [f"{prefix}{k}" for k in range(P.shape[1])]
    return out


def _closure_report(name: str, mt: ManinTriple, first: bool) -> CheckReport:
    c = mt.adapted_constants()
    p = mt.p
    if first:
        block = c[:p, :p, p:]
    else:
        block = c[p:, p:, :p]
    return tensor_report(name, block)


def check_manin_triple(mt: ManinTriple) -> CheckReport:
    N = mt.ambient.dim
    P = mt.P
    if P.shape[1] != N or ex.det(P) == 0:
        return CheckReport.fail(
            "manin_triple", ("direct_sum", P.shape[1]), ex.rank(P) if P.size else 0,
            (CheckReport.fail("direct_sum", P.shape[1], ex.rank(P) if P.size else 0),),
        )
    return combine("manin_triple", [
        CheckReport.ok("direct_sum"),
        _closure_report("first_subalgebra", mt, True),
        _closure_report("second_subalgebra", mt, False),
        check_invariant_form(mt.ambient, mt.S),
        tensor_report("first_isotropic", matmul(matmul(mt.Pg.T, mt.S), mt.Pg)),
        tensor_report("second_isotropic", matmul(matmul(mt.Ph.T, mt.S), mt.Ph)),
    ])


class RBManinTriple:
    __slots__ = ("triple", "operator", "weight")

    def __init__(self, triple: ManinTriple, operator, lam, validate: bool = True):
        operator = ex.qarray(operator)
        N = triple.ambient.dim
        if operator.shape != (N, N):
            raise DimensionMismatch(f"operator must be {N} x {N}")
        operator.flags.writeable = False
        self.triple, self.operator, self.weight = triple, operator, ex.q(lam)
        if validate:
            rep = check_rb_manin_triple(self)
            if not rep:
                raise NotManinTriple(f"not a Rota-Baxter Manin triple: {rep.witness}", rep)

    def adapted_operator(self) -> np.ndarray:
        P = self.triple.P
        return matmul(matmul(ex.inv(P), self.operator), P)

    def restrictions(self):
        """``(B, C)``: the operator on each subalgebra, in its own basis."""
        A = self.adapted_operator()
        p = self.triple.p
        return A[:p, :p].copy(), A[p:, p:].copy()


def check_rb_manin_triple(rbmt: RBManinTriple) -> CheckReport:
    mt = rbmt.triple
    parts = [check_manin_triple(mt)]
    if not parts[0]:
        return combine("rb_manin_triple", parts)
    A = rbmt.adapted_operator()
    p = mt.p
    parts += [
        check_quadratic(mt.ambient, rbmt.operator, mt.S, rbmt.weight),
        tensor_report("preserves_first", A[p:, :p]),
        tensor_report("preserves_second", A[:p, p:]),
    ]
    return combine("rb_manin_triple", parts)


def pairing_form(n: int) -> np.ndarray:
    """``S(x + a, y + b) = a(y) + b(x)`` on ``g + g*``."""
    return swap_matrix(n)


def manin_from_bialgebra(bi: LieBialgebra) -> ManinTriple:
    n = bi.dim
    d = double_algebra(bi)
    Pg = np.concatenate([ex.eye(n), ex.zeros(n, n)], axis=0)
    Ph = np.concatenate([ex.zeros(n, n), ex.eye(n)], axis=0)
    return ManinTriple(d, pairing_form(n), Pg, Ph)


def manin_from_rb_bialgebra(rbbi: RBLieBialgebra) -> RBManinTriple:
    """The double with operator ``x + a -> Bx - lam a - B* a``."""
    mt = manin_from_bialgebra(rbbi.bialgebra)
    op = ex.block_diag(rbbi.B, tilde(rbbi.B.T, rbbi.weight))
    return RBManinTriple(mt, op, rbbi.weight)


def bialgebra_from_manin(mt: ManinTriple) -> LieBialgebra:
    g, dual, _ = _transport_second(mt)
    return LieBialgebra(g, dual)


def _transport_second(mt: ManinTriple):
    """``g``, the bracket of the second subalgebra moved onto ``g*`` through
    ``a -> S(a, .)``, and the matrix of that identification."""
    g = mt.first()
    h = mt.second()
    K = matmul(matmul(mt.Pg.T, mt.S), mt.Ph)  # K[j, a] = S(g_j, h_a)
    if ex.det(K) == 0:
        raise NotManinTriple("the form does not pair the two subalgebras nondegenerately")
    Kinv = ex.inv(K)
    dual_c = push(K, pullback(h.c, Kinv, Kinv))
    if ex.equal(K, ex.eye(g.dim)):
        names = list(h.basis)
    else:
        names = [f"{b}*" for b in g.basis]
    dual = LieAlgebra(dual_c, names, f"{g.name}*")
    return g, dual, K


def rb_bialgebra_from_manin(rbmt: RBManinTriple) -> RBLieBialgebra:
    g, dual, K = _transport_second(rbmt.triple)
    B, C = rbmt.restrictions()
    lam = rbmt.weight
    C_on_dual = matmul(matmul(K, C), ex.inv(K))
    if not ex.equal(C_on_dual, tilde(B.T, lam)):
        raise NotManinTriple("operator on the second subalgebra is not -lam id - B*")
    return RBLieBialgebra(LieBialgebra(g, dual), B, lam)


def projection_operator(mt: ManinTriple, lam) -> np.ndarray:
    """``x + a -> -lam a``: minus ``lam`` times the projection onto the second
    subalgebra along the first."""
    P = mt.P
    p, N = mt.p, mt.ambient.dim
    D = ex.zeros(N, N)
    for i in range(p, N):
        D[i, i] = -ex.q(lam)
    return matmul(matmul(P, D), ex.inv(P))


# -- realified sl(n, C) --------------------------------------------------------

class ComplexMatrix:
    """Exact complex matrix as a pair of rational matrices."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = ex.qarray(re)
        self.im = ex.zeros(*self.re.shape) if im is None else ex.qarray(im)

    def __matmul__(self, other):
        return ComplexMatrix(
            matmul(self.re, other.re) - matmul(self.im, other.im),
            matmul(self.re, other.im) + matmul(self.im, other.re),
        )

    def __add__(self, other):
        return ComplexMatrix(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexMatrix(self.re - other.re, self.im - other.im)

    def __mul__(self, s):
        s = ex.q(s)
        return ComplexMatrix(self.re * s, self.im * s)

    __rmul__ = __mul__

    def times_i(self):
        return ComplexMatrix(-self.im, self.re)

    def trace(self):
        return sum(self.re.diagonal(), Fraction(0)), sum(self.im.diagonal(), Fraction(0))

    def to_complex(self) -> np.ndarray:
        return (self.re.astype(float) + 1j * self.im.astype(float))


def _unit(n, j, k) -> ComplexMatrix:
    m = ex.zeros(n, n)
    m[j, k] = Fraction(1)
    return ComplexMatrix(m)


def _H(n, m) -> ComplexMatrix:
    return _unit(n, m, m) - _unit(n, m + 1, m + 1)


def sl_basis(n: int):
    """Real basis of sl(n, C): ``E_jk, iE_jk`` off the diagonal (row-major),
    then ``H_m, iH_m`` with ``H_m = E_mm - E_(m+1)(m+1)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    names, mats = [], []
    for j in range(n):
        for k in range(n):
            if j != k:
                E = _unit(n, j, k)
                names += [f"E{j + 1}{k + 1}", f"iE{j + 1}{k + 1}"]
                mats += [E, E.times_i()]
    for m in range(n - 1):
        H = _H(n, m)
        names += [f"H{m + 1}", f"iH{m + 1}"]
        mats += [H, H.times_i()]
    return names, mats


def sl_coordinates(X: ComplexMatrix) -> np.ndarray:
    """Coordinates of a traceless complex matrix in :func:`sl_basis`."""
    n = X.re.shape[0]
    tr = X.trace()
    if tr != (0, 0):
        raise ValueError("matrix is not traceless")
    out = []
    for j in range(n):
        for k in range(n):
            if j != k:
                out += [X.re[j, k], X.im[j, k]]
    acc_re = acc_im = Fraction(0)
    for m in range(n - 1):
        acc_re += X.re[m, m]
        acc_im += X.im[m, m]
        out += [acc_re, acc_im]
    return ex.qarray(out)


def realified_sl(n: int) -> LieAlgebra:
    names, mats = sl_basis(n)
    N = len(mats)
    c = ex.zeros(N, N, N)
    for i in range(N):
        for j in range(i + 1, N):
            v = sl_coordinates(mats[i] @ mats[j] - mats[j] @ mats[i])
            c[i, j] = v
            c[j, i] = -v
    return LieAlgebra(c, names, f"sl({n},C)")


def trace_form(n: int, part: str = "im") -> np.ndarray:
    """Gram matrix of ``Im tr(XY)`` (or ``Re tr(XY)``) on :func:`sl_basis`."""
    _, mats = sl_basis(n)
    N = len(mats)
    S = ex.zeros(N, N)
    k = 1 if part == "im" else 0
    for i in range(N):
        for j in range(N):
            S[i, j] = (mats[i] @ mats[j]).trace()[k]
    return S


def su_injection(n: int) -> np.ndarray:
    """Columns ``E_jk - E_kj``, ``i(E_jk + E_kj)`` for ``j < k``, then ``iH_m``."""
    cols = []
    for j in range(n):
        for k in range(j + 1, n):
            cols.append(sl_coordinates(_unit(n, j, k) - _unit(n, k, j)))
            cols.append(sl_coordinates((_unit(n, j, k) + _unit(n, k, j)).times_i()))
    for m in range(n - 1):
        cols.append(sl_coordinates(_H(n, m).times_i()))
    return np.stack(cols, axis=1)


def sb_injection(n: int) -> np.ndarray:
    """Columns ``E_jk``, ``iE_jk`` for ``j < k``, then ``H_m``."""
    cols = []
    for j in range(n):
        for k in range(j + 1, n):
            cols.append(sl_coordinates(_unit(n, j, k)))
            cols.append(sl_coordinates(_unit(n, j, k).times_i()))
    for m in range(n - 1):
        cols.append(sl_coordinates(_H(n, m)))
    return np.stack(cols, axis=1)


def iwasawa_operator_matrix(n: int, lam) -> np.ndarray:
    """``X -> -lam A`` with ``A`` the sb-part of ``X``, from the entrywise
    formula ``a_ii = Re x_ii``, ``a_ij = x_ij + conj(x_ji)`` for ``i < j``."""
    names, mats = sl_basis(n)
    lam = ex.q(lam)
    cols = []
    for X in mats:
        re = ex.zeros(n, n)
        im = ex.zeros(n, n)
        for i in range(n):
            re[i, i] = X.re[i, i]
            for j in range(i + 1, n):
                re[i, j] = X.re[i, j] + X.re[j, i]
                im[i, j] = X.im[i, j] - X.im[j, i]
        cols.append(sl_coordinates(ComplexMatrix(re, im) * (-lam)))
    return np.stack(cols, axis=1)


def iwasawa_manin_triple(n: int, part: str = "im", validate: bool = True) -> ManinTriple:
    return ManinTriple(realified_sl(n), trace_form(n, part), su_injection(n), sb_injection(n), validate)


def _block_pair(top, bottom) -> np.ndarray:
    return np.concatenate([top, bottom], axis=0)


def double_sl(n: int) -> LieAlgebra:
    L = realified_sl(n)
    return direct_sum(L, L, name=f"sl({n},C)+sl({n},C)")


def standard_manin_triple(n: int, validate: bool = True) -> ManinTriple:
    """``sl + sl`` with ``Im tr(X1 X2) - Im tr(Y1 Y2)``, the diagonal, and
    ``{(Y + X_+, -Y + X_-)}``."""
    names, mats = sl_basis(n)
    N = len(mats)
    S0 = trace_form(n)
    S = ex.block_diag(S0, -S0)
    I = ex.eye(N)
    Pg = _block_pair(I, I)
    cols = []
    for j in range(n):
        for k in range(j + 1, n):
            for E in (_unit(n, j, k), _unit(n, j, k).times_i()):
                cols.append(np.concatenate([sl_coordinates(E), ex.zeros(N)]))
            for E in (_unit(n, k, j), _unit(n, k, j).times_i()):
                cols.append(np.concatenate([ex.zeros(N), sl_coordinates(E)]))
    for m in range(n - 1):
        for Y in (_H(n, m), _H(n, m).times_i()):
            y = sl_coordinates(Y)
            cols.append(np.concatenate([y, -y]))
    Ph = np.stack(cols, axis=1)
    return ManinTriple(double_sl(n), S, Pg, Ph, validate)


def standard_operator_matrix(n: int, lam) -> np.ndarray:
    """``(X, Y) -> -lam(1/2 (X-Y)_0 + (X-Y)_+, -1/2 (X-Y)_0 - (X-Y)_-)``."""
    _, mats = sl_basis(n)
    lam = ex.q(lam)
    half = Fraction(1, 2)
    cols = []
    for side in (0, 1):
        for X in mats:
            Z = X if side == 0 else X * -1  # X - Y with the other half zero
            d_re, d_im = ex.zeros(n, n), ex.zeros(n, n)
            u_re, u_im = ex.zeros(n, n), ex.zeros(n, n)
            l_re, l_im = ex.zeros(n, n), ex.zeros(n, n)
            for i in range(n):
                for j in range(n):
                    if i == j:
                        d_re[i, j], d_im[i, j] = Z.re[i, j], Z.im[i, j]
                    elif i < j:
                        u_re[i, j], u_im[i, j] = Z.re[i, j], Z.im[i, j]
                    else:
                        l_re[i, j], l_im[i, j] = Z.re[i, j], Z.im[i, j]
            D0 = ComplexMatrix(d_re, d_im)
            first = (D0 * half + ComplexMatrix(u_re, u_im)) * (-lam)
            second = (D0 * (-half) - ComplexMatrix(l_re, l_im)) * (-lam)
            cols.append(np.concatenate([sl_coordinates(first), sl_coordinates(second)]))
    return np.stack(cols, axis=1)
