from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

import oracle as o
from rotabaxter import catalog as cat
from rotabaxter import exact as ex
from rotabaxter.bialgebra import (
    LieBialgebra,
    RMatrix,
    bialgebra_iso_I,
    check_ad_invariance,
    check_cybe,
    check_lie_bialgebra,
    check_quasitriangular,
    check_rb_bialgebra,
    descendent_tower,
    double_rb_bialgebra,
    dual_bracket_r,
    factorizable_from_quadratic_rb,
    is_factorizable,
    quadratic_rb_from_factorizable,
    swap_matrix,
)
from rotabaxter.core import LieAlgebra
from rotabaxter.errors import NotBialgebra, NotFactorizable, NotQuasitriangular, ZeroWeight
from rotabaxter.kernels import matmul

R_SL2 = cat.sl2_r_components()


def test_standard_r_is_quasitriangular():
    L = cat.sl2()
    assert check_quasitriangular(L, R_SL2)
    c, r = o.tolist(L.c), o.tolist(R_SL2)
    assert o.is_zero(o.cybe(c, r))
    I = [[r[i][j] + r[j][i] for j in range(3)] for i in range(3)]
    assert all(o.is_zero(o.ad_on_tensor(c, o.unit(3, k), I)) for k in range(3))
    assert is_factorizable(L, R_SL2)


def test_dual_bracket_of_r_frozen():
    # [h*, e*] = -1/2 e*, [h*, f*] = -1/2 f*, [e*, f*] = 0
    L = cat.sl2()
    gr = dual_bracket_r(L, R_SL2)
    want = LieAlgebra.from_brackets(
        ["h*", "e*", "f*"], [("h*", "e*", Fraction(-1, 2), "e*"), ("h*", "f*", Fraction(-1, 2), "f*")]
    )
    assert ex.equal(gr.c, want.c)
    assert o.tolist(gr.c) == o.dual_constants_from_r(o.tolist(L.c), o.tolist(R_SL2))


@pytest.mark.parametrize("lam", [1, 2, -3])
def test_factorizable_to_quadratic_rb_sl2(lam):
    qrb = quadratic_rb_from_factorizable(cat.sl2(), R_SL2, lam)
    lam = Fraction(lam)
    assert ex.equal(qrb.B, ex.diag([-lam / 2, -lam, 0]))
    assert ex.equal(qrb.S, cat.sl2_trace_form())
    tq = quadratic_rb_from_factorizable(cat.sl2(), R_SL2, lam, tilde_variant=True)
    assert ex.equal(tq.B, ex.diag([-lam / 2, 0, -lam]))
    assert o.is_quadratic_rb(o.tolist(qrb.algebra.c), o.tolist(qrb.B), o.tolist(qrb.S), lam)


def test_round_trips_exact():
    for lam in (1, 2, -3):
        for name, (L, r) in cat.factorizable_r_matrices().items():
            qrb = quadratic_rb_from_factorizable(L, r, lam)
            back = factorizable_from_quadratic_rb(qrb)
            assert ex.equal(back.r, r), name
        for name, qrb in cat.quadratic_rb_structures(lam).items():
            r = factorizable_from_quadratic_rb(qrb)
            again = quadratic_rb_from_factorizable(qrb.algebra, r, lam)
            assert ex.equal(again.B, qrb.B) and ex.equal(again.S, qrb.S), name


def test_preconditions():
    L = cat.sl2()
    skew = ex.zeros(3, 3)
    with pytest.raises(NotFactorizable, match="I singular"):
        quadratic_rb_from_factorizable(L, skew, 1)
    with pytest.raises(ZeroWeight):
        quadratic_rb_from_factorizable(L, R_SL2, 0)
    bad = R_SL2.copy()
    bad[0, 1] = Fraction(1)
    with pytest.raises(NotQuasitriangular):
        quadratic_rb_from_factorizable(L, bad, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.fractions(-3, 3, max_denominator=4).filter(bool))
def test_r_mutations_are_caught(i, j, delta):
    r = R_SL2.copy()
    r[i, j] = r[i, j] + delta
    rep = check_quasitriangular(cat.sl2(), r)
    assert not rep and rep.witness is not None
    # the symmetric part stops being invariant, so the failure is ad-invariance
    assert not check_ad_invariance(cat.sl2(), r)


def test_cybe_oracle_on_non_solution():
    L = cat.sl2()
    r = ex.zeros(3, 3)
    r[1, 1] = Fraction(1)
    r[0, 2] = Fraction(1)
    rep = check_cybe(L, r)
    assert not rep
    T = o.cybe(o.tolist(L.c), o.tolist(r))
    i, j, k = rep.witness
    assert T[i][j][k] == rep.residual != 0


def test_catalog_bialgebras_are_bialgebras():
    for name in cat.BIALGEBRA_NAMES:
        bi = cat.bialgebra(name)
        assert check_lie_bialgebra(bi), name
        assert o.cocycle_failures(o.tolist(bi.algebra.c), o.tolist(bi.dual.c)) == [], name


def test_every_aff1_dual_is_a_bialgebra():
    # exhaustive over [e1*, e2*] = a e1* + b e2*, a, b in -2..2
    for a, b in product(range(-2, 3), repeat=2):
        dual = LieAlgebra.from_brackets(["e1*", "e2*"], [("e1*", "e2*", a, "e1*"), ("e1*", "e2*", b, "e2*")])
        assert check_lie_bialgebra(LieBialgebra(cat.aff1(), dual, validate=False))
        assert o.cocycle_failures(o.tolist(cat.aff1().c), o.tolist(dual.c)) == []


def test_sl2_single_bracket_duals_fail():
    names = ["h*", "e*", "f*"]
    L = cat.sl2()
    count = 0
    for (a, b), k in product([(0, 1), (0, 2), (1, 2)], range(3)):
        dual = LieAlgebra.from_brackets(names, [(names[a], names[b], 1, names[k])], validate=False)
        if not o.is_lie(o.tolist(dual.c)):
            continue
        count += 1
        assert not check_lie_bialgebra(LieBialgebra(L, dual, validate=False))
        assert o.cocycle_failures(o.tolist(L.c), o.tolist(dual.c))
    assert count == 9


def test_sl2_counterexample_witness_frozen():
    dual = LieAlgebra.from_brackets(["h*", "e*", "f*"], [("h*", "e*", 1, "e*")])
    rep = check_lie_bialgebra(LieBialgebra(cat.sl2(), dual, validate=False))
    assert rep.witness == ("mp1", (1, 1, 2, 2)) and rep.residual == 2
    with pytest.raises(NotBialgebra):
        LieBialgebra(cat.sl2(), dual)


def test_negated_dual_of_r_is_still_a_bialgebra():
    gr = dual_bracket_r(cat.sl2(), R_SL2)
    neg = LieAlgebra(-gr.c, gr.basis)
    assert check_lie_bialgebra(LieBialgebra(cat.sl2(), neg, validate=False))


@pytest.mark.parametrize("name", cat.BIALGEBRA_NAMES)
@pytest.mark.parametrize("lam", [1, 2])
def test_drinfeld_double(name, lam):
    d, r, rbbi = cat.drinfeld_double_of(name, lam)
    n = d.dim // 2
    assert check_cybe(d, r.r) and check_ad_invariance(d, r.r)
    assert ex.equal(matmul(r.I, swap_matrix(n)), ex.eye(2 * n))
    assert ex.equal(rbbi.B, ex.block_diag(ex.zeros(n, n), -Fraction(lam) * ex.eye(n)))
    assert check_rb_bialgebra(rbbi)
    assert check_rb_bialgebra(double_rb_bialgebra(rbbi))
    c, rr = o.tolist(d.c), o.tolist(r.r)
    assert o.is_zero(o.cybe(c, rr))
    assert o.cocycle_failures(c, o.tolist(rbbi.dual.c)) == []


@pytest.mark.parametrize("lam", [1, 2, -3])
def test_sl2_factorizable_identities(lam):
    L = cat.sl2()
    assert bialgebra_iso_I(L, R_SL2, lam)
    assert descendent_tower(L, R_SL2, lam, 2)


def test_catalog_rb_bialgebras():
    for lam in (1, 2):
        for name in cat.RB_BIALGEBRA_NAMES:
            rbbi = cat.rb_bialgebra(name, lam)
            assert check_rb_bialgebra(rbbi), name
            assert ex.equal(rbbi.dual_operator, -Fraction(lam) * ex.eye(rbbi.algebra.dim) - rbbi.B.T)


def test_rb_bialgebra_mutation_caught():
    rbbi = cat.rb_bialgebra("sl2", 1)
    B = rbbi.B.copy()
    B[2, 2] = Fraction(1)
    from rotabaxter.bialgebra import RBLieBialgebra

    assert not check_rb_bialgebra(RBLieBialgebra(rbbi.bialgebra, B, 1, validate=False))


def test_rmatrix_parts():
    rm = RMatrix(cat.sl2(), R_SL2)
    assert ex.equal(rm.plus, R_SL2.T)
    assert ex.equal(rm.minus, -R_SL2)
    assert ex.equal(rm.I, R_SL2 + R_SL2.T)
