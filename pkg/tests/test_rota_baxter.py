from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracle as o
from rotabaxter import catalog as cat
from rotabaxter import exact as ex
from rotabaxter.core import LieAlgebra, Representation, check_jacobi
from rotabaxter.errors import NotQuadratic, NotRotaBaxter, ZeroWeight
from rotabaxter.rota_baxter import (
    QuadraticRBStructure,
    RotaBaxterStructure,
    adjoint_rep,
    check_quadratic,
    check_rb_representation,
    check_rota_baxter,
    coadjoint_rep,
    descendent,
    factorize_element,
    iterated_descendent,
    modified_ybe_check,
    rb_residual,
    semidirect_product,
    sharp_isomorphism,
    tilde,
)

LAMBDAS = [1, 2, -3, Fraction(1, 2)]


def _sl2_B(lam):
    lam = Fraction(lam)
    return ex.diag([-lam / 2, -lam, 0])


@pytest.mark.parametrize("lam", LAMBDAS)
def test_sl2_operator_is_rota_baxter(lam):
    L = cat.sl2()
    B = _sl2_B(lam)
    assert check_rota_baxter(L, B, lam)
    assert o.rb_failures(o.tolist(L.c), o.tolist(B), lam) == []


@pytest.mark.parametrize("lam", LAMBDAS)
def test_descendent_of_sl2_is_frozen(lam):
    # frozen from the oracle: [h, e]_B = -lam e, [h, f]_B = -lam f, [e, f]_B = 0
    L = cat.sl2()
    D = descendent(L, _sl2_B(lam), lam)
    lam = Fraction(lam)
    want = LieAlgebra.from_brackets(["h", "e", "f"], [("h", "e", -lam, "e"), ("h", "f", -lam, "f")])
    assert ex.equal(D.c, want.c)
    assert o.tolist(D.c) == o.descendent(o.tolist(L.c), o.tolist(_sl2_B(lam)), lam)


def test_descendent_is_lie_and_B_is_homomorphism():
    for lam in LAMBDAS:
        for name, rb in cat.rb_structures(lam).items():
            D = rb.descendent()
            assert check_jacobi(D), name
            # [Bx, By] = B[x, y]_B
            lhs = np.einsum("ai,bj,abk->ijk", rb.B, rb.B, rb.algebra.c)
            rhs = np.einsum("km,ijm->ijk", rb.B, D.c)
            assert ex.equal(lhs, rhs), name


def test_iterated_descendent_stays_rota_baxter():
    rb = RotaBaxterStructure(cat.sl2(), _sl2_B(1), 1)
    for k in range(4):
        Dk = iterated_descendent(rb.algebra, rb.B, 1, k)
        assert check_rota_baxter(Dk, rb.B, 1)
    assert iterated_descendent(rb.algebra, rb.B, 1, 0) == rb.algebra


def test_tilde_sl2_frozen():
    for lam in LAMBDAS:
        lam = Fraction(lam)
        assert ex.equal(tilde(_sl2_B(lam), lam), ex.diag([-lam / 2, 0, -lam]))


def test_modified_ybe_frozen_witnesses():
    L = cat.sl2()
    assert modified_ybe_check(L, ex.zeros(3, 3))
    rep = modified_ybe_check(L, -ex.eye(3) / 2)
    assert not rep
    assert rep.witness == (0, 1)
    assert list(rep.residual) == [0, 2, 0]
    rb = check_rota_baxter(L, -ex.eye(3) / 2, 1)
    assert rb.witness == (0, 1) and list(rb.residual) == [0, Fraction(1, 2), 0]
    assert o.rb_failures(o.tolist(L.c), o.tolist(-ex.eye(3) / 2), 1)[0] == (0, 1, [0, Fraction(1, 2), 0])


def test_coadjoint_without_tilde_fails_on_sl2():
    for lam, value in ((1, 1), (2, 4)):
        rb = RotaBaxterStructure(cat.sl2(), _sl2_B(lam), lam)
        rep = check_rb_representation(rb, rb.B.T, Representation.coadjoint(rb.algebra))
        assert not rep
        assert rep.witness == (1, 0, 1) and rep.residual == value
        # oracle: rho(Bx) T - T (rho(Bx) + rho(x) T + lam rho(x)) at x = e
        co = o.coadjoint_mats(o.tolist(rb.algebra.c))
        T = o.transpose(o.tolist(rb.B))
        Bx = o.tolist(rb.B)[1][1]  # B e = -lam e
        rBx = [[Bx * v for v in row] for row in co[1]]
        inner = [[rBx[i][j] + o.matmul(co[1], T)[i][j] + lam * co[1][i][j] for j in range(3)] for i in range(3)]
        res = [[o.matmul(rBx, T)[i][j] - o.matmul(T, inner)[i][j] for j in range(3)] for i in range(3)]
        assert res[0][1] == value


def test_adjoint_and_coadjoint_rb_representations():
    for lam in LAMBDAS:
        for name, rb in cat.rb_structures(lam).items():
            assert adjoint_rep(rb).dim == rb.dim
            assert coadjoint_rep(rb).dim == rb.dim, name


def test_semidirect_product_with_coadjoint():
    rb = RotaBaxterStructure(cat.sl2(), _sl2_B(2), 2)
    big = semidirect_product(coadjoint_rep(rb))
    assert big.dim == 6
    assert check_rota_baxter(big.algebra, big.B, 2)


@pytest.mark.parametrize("lam", LAMBDAS)
def test_sharp_isomorphism_intertwines(lam):
    qrb = cat.sl2_standard_r(lam).qrb
    M = sharp_isomorphism(qrb)
    assert ex.equal(M, cat.sl2_trace_form())


def test_quadratic_catalog():
    for lam in LAMBDAS:
        for name, qrb in cat.quadratic_rb_structures(lam).items():
            c, B, S = (o.tolist(a) for a in (qrb.algebra.c, qrb.B, qrb.S))
            assert check_quadratic(qrb.algebra, qrb.B, qrb.S, lam), name
            assert o.is_quadratic_rb(c, B, S, lam), name


def test_quadratic_rejects_bad_forms():
    L = cat.sl2()
    B = _sl2_B(1)
    S = cat.sl2_trace_form()
    rep = check_quadratic(L, B, ex.zeros(3, 3), 1)
    assert not rep and rep.witness[0] == "nondegenerate"
    bad = S.copy()
    bad[0, 1] = Fraction(1)
    assert check_quadratic(L, B, bad, 1).witness[0] == "symmetric"
    assert check_quadratic(L, ex.zeros(3, 3), S, 1).witness[0] == "compatibility"
    with pytest.raises(NotQuadratic):
        QuadraticRBStructure(L, ex.zeros(3, 3), S, 1)


def test_structure_constructors_validate():
    with pytest.raises(NotRotaBaxter):
        RotaBaxterStructure(cat.sl2(), -ex.eye(3) / 2, 1)
    rb = RotaBaxterStructure(cat.sl2(), _sl2_B(1), 1)
    with pytest.raises(ValueError):
        rb.B[0, 0] = Fraction(3)


def test_factorize_element():
    rb = RotaBaxterStructure(cat.sl2(), _sl2_B(2), 2)
    x = ex.qarray([1, 2, 3])
    xp, xm = factorize_element(rb, x)
    assert ex.equal(xp - xm, x)
    assert ex.equal(xm, ex.qarray([-Fraction(1, 2), -2, 0]))
    with pytest.raises(ZeroWeight):
        factorize_element(RotaBaxterStructure(cat.sl2(), ex.zeros(3, 3), 0), x)


def _mutations(draw_entry, draw_value, B):
    i, j = draw_entry
    M = B.copy()
    M[i, j] = M[i, j] + Fraction(draw_value)
    return M


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(cat.rb_structures(1))), st.tuples(st.integers(0, 2), st.integers(0, 2)),
       st.integers(-3, 3).filter(bool))
def test_rb_iff_tilde_rb_and_mybe_iff_rb(name, entry, value):
    rb = cat.rb_structures(1)[name]
    n = rb.dim
    entry = (entry[0] % n, entry[1] % n)
    for B in (rb.B, _mutations(entry, value, rb.B)):
        passed = bool(check_rota_baxter(rb.algebra, B, 1))
        assert bool(check_rota_baxter(rb.algebra, tilde(B, 1), 1)) == passed
        assert bool(modified_ybe_check(rb.algebra, B)) == passed
        assert (not o.rb_failures(o.tolist(rb.algebra.c), o.tolist(B), 1)) == passed


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["aff1", "sl2"]), st.lists(st.integers(-2, 2), min_size=9, max_size=9),
       st.sampled_from([1, 2, -1]))
def test_rb_check_agrees_with_oracle(which, entries, lam):
    L = cat.aff1() if which == "aff1" else cat.sl2()
    n = L.dim
    B = ex.qarray(entries[: n * n], (n, n))
    rep = check_rota_baxter(L, B, lam)
    bad = o.rb_failures(o.tolist(L.c), o.tolist(B), lam)
    assert bool(rep) == (not bad)
    if bad:
        i, j, res = bad[0]
        assert rep.witness == (i, j)
        assert list(rep.residual) == res
    assert ex.equal(rb_residual(L, B, lam)[0, 0], ex.zeros(n))
