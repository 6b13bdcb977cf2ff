"""Validated example objects shared by the tests, the docs and the CLI.

Everything is built in code (never loaded from disk) and each entry runs its
manifest of checks on demand through ``CatalogEntry.check``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import exact as ex
from .bialgebra import (
    LieBialgebra,
    RBLieBialgebra,
    RMatrix,
    check_quasitriangular,
    check_rb_bialgebra,
    drinfeld_double,
    dual_basis,
    dual_bracket_r,
    is_factorizable,
    quadratic_rb_from_factorizable,
)
from .core import LieAlgebra, abelian as _abelian, check_jacobi
from .manin import (
    RBManinTriple,
    check_rb_manin_triple,
    iwasawa_manin_triple,
    iwasawa_operator_matrix,
    realified_sl,
    standard_manin_triple,
    standard_operator_matrix,
)
from .matched import MatchedPair, RBMatchedPair, check_rb_matched_pair, mp_from_rb
from .report import CheckReport, combine
from .rota_baxter import (
    QuadraticRBStructure,
    RotaBaxterStructure,
    check_quadratic,
    check_rota_baxter,
    tilde,
)

SUPPORTED_N = (2, 3)


def abelian(n: int = 2) -> LieAlgebra:
    return _abelian(n, [f"x{i + 1}" for i in range(n)], f"abelian({n})")


def aff1() -> LieAlgebra:
    """Two-dimensional nonabelian algebra ``[e1, e2] = e2``."""
    return LieAlgebra.from_brackets(["e1", "e2"], [("e1", "e2", 1, "e2")], name="aff1")


def sl2() -> LieAlgebra:
    """Basis ``(h, e, f)``: ``[h, e] = 2e``, ``[h, f] = -2f``, ``[e, f] = h``."""
    return LieAlgebra.from_brackets(
        ["h", "e", "f"], [("h", "e", 2, "e"), ("h", "f", -2, "f"), ("e", "f", 1, "h")], name="sl2"
    )


def sl2_r_components():
    """``r = e (x) f + 1/4 h (x) h``."""
    r = ex.zeros(3, 3)
    r[1, 2] = Fraction(1)
    r[0, 0] = Fraction(1, 4)
    return r


def sl2_trace_form():
    return ex.qarray([[2, 0, 0], [0, 0, 1], [0, 1, 0]])


@dataclass(frozen=True)
class FactorizableEntry:
    algebra: LieAlgebra
    r: RMatrix
    qrb: QuadraticRBStructure

    @property
    def weight(self) -> Fraction:
        return self.qrb.weight


def sl2_standard_r(lam=1) -> FactorizableEntry:
    L = sl2()
    r = RMatrix(L, sl2_r_components())
    qrb = quadratic_rb_from_factorizable(L, r, lam)
    lam = ex.q(lam)
    if not (ex.equal(qrb.B, ex.diag([-lam / 2, -lam, 0])) and ex.equal(qrb.S, sl2_trace_form())):
        raise AssertionError("sl2 operator or form differs from the expected closed form")
    return FactorizableEntry(L, r, qrb)


def aff1_dual(bracket: bool = True) -> LieAlgebra:
    names = ["e1*", "e2*"]
    if bracket:
        return LieAlgebra.from_brackets(names, [("e1*", "e2*", 1, "e2*")], name="aff1*")
    return _abelian(2, names, "aff1*")


BIALGEBRA_NAMES = ("abelian2", "aff1", "aff1-dual", "sl2")


def bialgebra(name: str) -> LieBialgebra:
    """``abelian2``/``aff1``: abelian dual; ``aff1-dual``: dual bracket
    ``[e1*, e2*] = e2*``; ``sl2``: the dual bracket of the standard r."""
    if name == "abelian2":
        g = abelian(2)
        return LieBialgebra(g, _abelian(2, dual_basis(g), "abelian(2)*"))
    if name == "aff1":
        return LieBialgebra(aff1(), aff1_dual(False))
    if name == "aff1-dual":
        return LieBialgebra(aff1(), aff1_dual(True))
    if name == "sl2":
        L = sl2()
        return LieBialgebra(L, dual_bracket_r(L, sl2_r_components()))
    raise KeyError(f"unknown bialgebra {name!r}; choose from {BIALGEBRA_NAMES}")


RB_BIALGEBRA_NAMES = ("abelian2", "aff1", "aff1-scalar", "sl2")


def rb_bialgebra(name: str, lam=1) -> RBLieBialgebra:
    """``abelian2``/``aff1``: ``B = diag(0, -lam)`` with abelian dual;
    ``aff1-scalar``: ``B = -lam id`` with ``[e1*, e2*] = e2*``;
    ``sl2``: ``B = lam r_- I^{-1}`` with the dual bracket of r."""
    lam = ex.q(lam)
    if name in ("abelian2", "aff1"):
        return RBLieBialgebra(bialgebra(name), ex.diag([0, -lam]), lam)
    if name == "aff1-scalar":
        return RBLieBialgebra(bialgebra("aff1-dual"), -lam * ex.eye(2), lam)
    if name == "sl2":
        return RBLieBialgebra(bialgebra("sl2"), sl2_standard_r(lam).qrb.B, lam)
    raise KeyError(f"unknown RB bialgebra {name!r}; choose from {RB_BIALGEBRA_NAMES}")


def drinfeld_double_of(name: str, lam=1):
    """``(d, r, RBLieBialgebra)`` for the double of a catalog bialgebra."""
    return drinfeld_double(bialgebra(name), lam)


def realified_sl_n_complex(n: int) -> LieAlgebra:
    _require_n(n)
    return realified_sl(n)


def _require_n(n):
    if n not in SUPPORTED_N:
        raise ValueError(f"n must be one of {SUPPORTED_N}, got {n}")


def iwasawa_triple(n: int, lam=1) -> RBManinTriple:
    """``sl(n, C) = su(n) + sb(n, C)`` with ``Im tr(XY)`` and ``-lam`` times
    the projection onto ``sb``."""
    _require_n(n)
    return RBManinTriple(iwasawa_manin_triple(n), iwasawa_operator_matrix(n, lam), lam)


def direct_sum_sl_n_triple(n: int, lam=1) -> RBManinTriple:
    _require_n(n)
    return RBManinTriple(standard_manin_triple(n), standard_operator_matrix(n, lam), lam)


def rb_structures(lam=1) -> dict:
    """Rota-Baxter structures of weight ``lam`` used as a regression corpus."""
    lam = ex.q(lam)
    L = sl2()
    B = sl2_standard_r(lam).qrb.B if lam != 0 else ex.zeros(3, 3)
    out = {
        "abelian2-zero": RotaBaxterStructure(abelian(2), ex.zeros(2, 2), lam),
        "aff1-diag": RotaBaxterStructure(aff1(), ex.diag([0, -lam]), lam),
        "aff1-scalar": RotaBaxterStructure(aff1(), -lam * ex.eye(2), lam),
        "sl2-zero": RotaBaxterStructure(L, ex.zeros(3, 3), lam),
        "sl2-scalar": RotaBaxterStructure(L, -lam * ex.eye(3), lam),
        "sl2-factorizable": RotaBaxterStructure(L, B, lam),
        "sl2-factorizable-tilde": RotaBaxterStructure(L, tilde(B, lam), lam),
    }
    return out


def quadratic_rb_structures(lam=1) -> dict:
    lam = ex.q(lam)
    out = {
        "sl2": sl2_standard_r(lam).qrb,
        "sl2-tilde": quadratic_rb_from_factorizable(sl2(), sl2_r_components(), lam, tilde_variant=True),
        "abelian2-half": QuadraticRBStructure(abelian(2), -lam / 2 * ex.eye(2), ex.eye(2), lam),
    }
    for name in BIALGEBRA_NAMES:
        d, r, _ = drinfeld_double(bialgebra(name), lam)
        out[f"double-{name}"] = quadratic_rb_from_factorizable(d, r, lam)
    return out


def factorizable_r_matrices() -> dict:
    """``(algebra, r)`` pairs with invertible ``I``."""
    out = {"sl2": (sl2(), sl2_r_components())}
    for name in BIALGEBRA_NAMES:
        d, r, _ = drinfeld_double(bialgebra(name), 1)
        out[f"double-{name}"] = (d, r.r)
    return out


def rb_matched_pairs(lam=1) -> dict:
    """Matched pairs of Rota-Baxter Lie algebras of weight ``lam``."""
    lam = ex.q(lam)
    out = {}
    for name, rb in rb_structures(lam).items():
        mp = mp_from_rb(rb)
        out[f"from-rb-{name}"] = RBMatchedPair(mp, rb.B, rb.B, lam)
    out["trivial-aff1-sl2"] = RBMatchedPair(
        MatchedPair.trivial(aff1(), sl2()), ex.diag([0, -lam]), sl2_standard_r(lam).qrb.B, lam
    )
    for name in RB_BIALGEBRA_NAMES:
        rbbi = rb_bialgebra(name, lam)
        out[f"bialgebra-{name}"] = RBMatchedPair(
            rbbi.bialgebra.matched_pair(), rbbi.B, rbbi.dual_operator, lam
        )
    return out


@dataclass
class CatalogEntry:
    name: str
    params: dict
    build: Callable[[], object]
    manifest: list = field(default_factory=list)
    _obj: object = None

    @property
    def obj(self):
        if self._obj is None:
            self._obj = self.build()
        return self._obj

    def check(self) -> CheckReport:
        return combine(self.name, [f(self.obj) for f in self.manifest])


def entries() -> list:
    def fact_checks(e: FactorizableEntry):
        return combine("factorizable", [
            check_quasitriangular(e.algebra, e.r),
            CheckReport("invertible_I", is_factorizable(e.algebra, e.r)),
            check_rota_baxter(e.algebra, e.qrb.B, e.weight),
            check_quadratic(e.algebra, e.qrb.B, e.qrb.S, e.weight),
        ])

    out = [
        CatalogEntry("abelian(2)", {"n": 2}, lambda: abelian(2), [check_jacobi]),
        CatalogEntry("aff1", {}, aff1, [check_jacobi]),
        CatalogEntry("sl2", {}, sl2, [check_jacobi]),
    ]
    for lam in (1, 2, -3):
        out.append(CatalogEntry(f"sl2_standard_r(lam={lam})", {"lam": lam},
                                lambda lam=lam: sl2_standard_r(lam), [fact_checks]))
    for name in RB_BIALGEBRA_NAMES:
        out.append(CatalogEntry(f"rb_bialgebra({name})", {"name": name, "lam": 1},
                                lambda name=name: rb_bialgebra(name), [check_rb_bialgebra]))
    for name in BIALGEBRA_NAMES:
        out.append(CatalogEntry(f"drinfeld_double_of({name})", {"name": name, "lam": 1},
                                lambda name=name: drinfeld_double_of(name, 1)[2], [check_rb_bialgebra]))
    for n in SUPPORTED_N:
        out.append(CatalogEntry(f"iwasawa_triple({n})", {"n": n, "lam": 1},
                                lambda n=n: iwasawa_triple(n, 1), [check_rb_manin_triple]))
        out.append(CatalogEntry(f"direct_sum_sl_n_triple({n})", {"n": n, "lam": 1},
                                lambda n=n: direct_sum_sl_n_triple(n, 1), [check_rb_manin_triple]))
    for name, rbmp in rb_matched_pairs(1).items():
        out.append(CatalogEntry(f"rb_matched_pair({name})", {"name": name, "lam": 1},
                                lambda rbmp=rbmp: rbmp, [check_rb_matched_pair]))
    return out
