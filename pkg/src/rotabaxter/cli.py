"""Command line interface.

Exit codes: 0 every check passed, 1 a check failed, 2 bad input (unreadable
or malformed file, missing block, unsupported parameter, violated
precondition of a construction).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from . import catalog
from . import fileformat as ff
from . import group as grp
from .bialgebra import (
    LieBialgebra,
    RBLieBialgebra,
    check_cybe,
    check_lie_bialgebra,
    check_quasitriangular,
    check_rb_bialgebra,
    drinfeld_double,
    factorizable_from_quadratic_rb,
    quadratic_rb_from_factorizable,
)
from .core import LieAlgebra, Representation, check_jacobi
from .errors import RotaBaxterError
from .manin import (
    ManinTriple,
    RBManinTriple,
    bialgebra_from_manin,
    check_manin_triple,
    check_rb_manin_triple,
    manin_from_bialgebra,
    manin_from_rb_bialgebra,
    rb_bialgebra_from_manin,
    iwasawa_operator_matrix,
    sl_basis,
)
from .matched import (
    MatchedPair,
    RBMatchedPair,
    check_matched_pair,
    check_rb_matched_pair,
    double_bowtie,
    double_D,
    mp_from_rb,
)
from .report import CheckReport, combine
from .rota_baxter import (
    QuadraticRBStructure,
    RotaBaxterStructure,
    check_quadratic,
    check_rota_baxter,
    iterated_descendent,
)

CHECKS = ("jacobi", "rb", "quadratic", "cybe", "quasitriangular", "bialgebra", "rb-bialgebra",
          "matched-pair", "rb-matched-pair", "manin", "rb-manin")
BUILDS = ("descendent", "double-d", "bowtie", "drinfeld-double", "rb-from-r", "r-from-rb",
          "manin-from-bialgebra", "bialgebra-from-manin", "tower")
GROUP_COMMANDS = ("check-rb", "factorize", "differentiate")


class InputError(Exception):
    """Anything that should end the process with exit code 2."""


def _valid(L: LieAlgebra) -> LieAlgebra:
    rep = check_jacobi(L)
    if not rep:
        raise InputError(f"{L.name or 'algebra'} is not a Lie algebra: {rep.witness}")
    return LieAlgebra(L.c, L.basis, L.name)


def _weight(f: ff.AlgebraFile, override=None) -> Fraction:
    if override is not None:
        return override
    return f.weight if f.weight is not None else Fraction(1)


# ---- matched pair data shared by check and build

def _matched_pair(f: ff.AlgebraFile, validate: bool):
    """``(MatchedPair, B, C)``; operators may be ``None``."""
    L = f.algebra
    if f.second is not None:
        rho = Representation(L, f.rho, f.second.dim, validate=False)
        mu = Representation(f.second, f.mu, L.dim, validate=False)
        mp = MatchedPair(L, f.second, rho, mu, validate=validate)
        return mp, f.operator, f.second_operator
    if f.dual is not None:
        bi = LieBialgebra(L, f.dual, validate=validate)
        C = None
        if f.operator is not None:
            C = RBLieBialgebra(bi, f.operator, f.weight, validate=False).dual_operator
        return bi.matched_pair(), f.operator, C
    if f.operator is not None:
        rb = RotaBaxterStructure(_valid(L), f.operator, f.weight)
        return mp_from_rb(rb), f.operator, f.operator
    raise ff.FormatError("second", "matched pair needs second/rho/mu, dual_brackets or an operator")


def _manin(f: ff.AlgebraFile, validate: bool) -> ManinTriple:
    f.require("form", "subalgebras")
    Pg, Ph = f.subalgebras
    return ManinTriple(f.algebra, f.form, Pg, Ph, validate=validate)


# ---- check

def _suite(f: ff.AlgebraFile, which: str) -> CheckReport:
    L = f.algebra
    jac = check_jacobi(L)
    if which == "jacobi" or not jac:
        return combine(which, [jac])
    if which == "rb":
        f.require("operator")
        return combine(which, [jac, check_rota_baxter(L, f.operator, f.weight)])
    if which == "quadratic":
        f.require("operator", "form")
        return combine(which, [jac, check_quadratic(L, f.operator, f.form, f.weight)])
    if which == "cybe":
        f.require("rmatrix")
        return combine(which, [jac, check_cybe(L, f.rmatrix)])
    if which == "quasitriangular":
        f.require("rmatrix")
        return combine(which, [jac, check_quasitriangular(L, f.rmatrix)])
    if which in ("bialgebra", "rb-bialgebra"):
        f.require("dual")
        djac = check_jacobi(f.dual)
        if not djac:
            return combine(which, [jac, djac])
        bi = LieBialgebra(L, f.dual, validate=False)
        if which == "bialgebra":
            return combine(which, [jac, djac, check_lie_bialgebra(bi)])
        f.require("operator")
        return combine(which, [jac, djac, check_rb_bialgebra(RBLieBialgebra(bi, f.operator, f.weight, validate=False))])
    if which in ("matched-pair", "rb-matched-pair"):
        parts = [jac]
        if f.second is not None:
            parts.append(check_jacobi(f.second))
        elif f.dual is not None:
            parts.append(check_jacobi(f.dual))
        if not all(parts):
            return combine(which, parts)
        mp, B, C = _matched_pair(f, validate=False)
        if which == "matched-pair":
            return combine(which, parts + [check_matched_pair(mp.g, mp.h, mp.rho, mp.mu)])
        if B is None or C is None:
            raise ff.FormatError("operator", "rb-matched-pair needs an operator on both algebras")
        rbmp = RBMatchedPair(mp, B, C, f.weight, validate=False)
        return combine(which, parts + [check_rb_matched_pair(rbmp)])
    if which in ("manin", "rb-manin"):
        mt = _manin(f, validate=False)
        if which == "manin":
            return combine(which, [jac, check_manin_triple(mt)])
        f.require("operator")
        return combine(which, [jac, check_rb_manin_triple(RBManinTriple(mt, f.operator, f.weight, validate=False))])
    raise InputError(f"unknown check {which!r}")


def cmd_check(path: str, which: str):
    f = ff.read(path)
    report = _suite(f, which)
    return ff.report_dict(f"check {which}", {"path": path, "which": which}, report), report.passed


# ---- build

def _build(f: ff.AlgebraFile, what: str, k: int | None, weight) -> ff.AlgebraFile:
    if what in ("descendent", "tower"):
        f.require("operator")
        steps = 1 if what == "descendent" else k
        if steps is None or steps < 0:
            raise InputError("tower needs a level k >= 0")
        L = _valid(f.algebra)
        rb = RotaBaxterStructure(L, f.operator, f.weight)
        D = iterated_descendent(L, rb.B, rb.weight, steps)
        return ff.AlgebraFile(D, operator=rb.B, weight=rb.weight)
    if what == "double-d":
        f.require("operator")
        rb = RotaBaxterStructure(_valid(f.algebra), f.operator, f.weight)
        D, _ = double_D(rb)
        return ff.AlgebraFile(D)
    if what == "bowtie":
        mp, B, C = _matched_pair(f, validate=True)
        d = double_bowtie(mp)
        if B is not None and C is not None:
            rbmp = RBMatchedPair(mp, B, C, f.weight)
            return ff.AlgebraFile(d, operator=rbmp.operator, weight=rbmp.weight)
        return ff.AlgebraFile(d)
    if what == "drinfeld-double":
        f.require("dual")
        lam = _weight(f, weight)
        d, r, rbbi = drinfeld_double(LieBialgebra(_valid(f.algebra), _valid(f.dual)), lam)
        qrb = quadratic_rb_from_factorizable(d, r, lam)
        return ff.AlgebraFile(d, operator=rbbi.B, weight=lam, form=qrb.S, rmatrix=r.r, dual=rbbi.dual)
    if what == "rb-from-r":
        f.require("rmatrix")
        lam = _weight(f, weight)
        qrb = quadratic_rb_from_factorizable(_valid(f.algebra), f.rmatrix, lam)
        return f.with_(rmatrix=None, operator=qrb.B, form=qrb.S, weight=qrb.weight)
    if what == "r-from-rb":
        f.require("operator", "form")
        qrb = QuadraticRBStructure(_valid(f.algebra), f.operator, f.form, f.weight)
        r = factorizable_from_quadratic_rb(qrb)
        return f.with_(operator=None, form=None, weight=None, rmatrix=r.r)
    if what == "manin-from-bialgebra":
        f.require("dual")
        bi = LieBialgebra(_valid(f.algebra), _valid(f.dual))
        if f.operator is not None:
            rbmt = manin_from_rb_bialgebra(RBLieBialgebra(bi, f.operator, f.weight))
            mt, op, lam = rbmt.triple, rbmt.operator, rbmt.weight
        else:
            mt, op, lam = manin_from_bialgebra(bi), None, None
        return ff.AlgebraFile(mt.ambient.renamed(name=f.name), operator=op, weight=lam,
                              form=mt.S, subalgebras=(mt.Pg, mt.Ph))
    if what == "bialgebra-from-manin":
        mt = _manin(f, validate=True)
        if f.operator is not None:
            rbbi = rb_bialgebra_from_manin(RBManinTriple(mt, f.operator, f.weight))
            bi, op, lam = rbbi.bialgebra, rbbi.B, rbbi.weight
        else:
            bi, op, lam = bialgebra_from_manin(mt), None, None
        return ff.AlgebraFile(bi.algebra.renamed(name=f.name), operator=op, weight=lam, dual=bi.dual)
    raise InputError(f"unknown construction {what!r}")


def cmd_build(path: str, what: str, k: int | None = None, weight=None) -> str:
    return ff.dumps(_build(ff.read(path), what, k, weight))


# ---- group

def _require_n(n: int):
    if n not in catalog.SUPPORTED_N:
        raise InputError(f"n must be one of {catalog.SUPPORTED_N}, got {n}")


def cmd_group(sub: str, n: int, seed: int = 0, tol=None, h: float = 1e-4, samples: int = 100):
    _require_n(n)
    if samples < 1:
        raise InputError("need at least one sample")
    op = grp.iwasawa_operator(n)
    inputs = {"n": n, "samples": samples, "tol": tol}
    if sub == "check-rb":
        triples = grp.sample(n, samples, seed, arity=3)
        report = combine("check-rb", [
            grp.check_rb_group(op, [t[:2] for t in triples], tol),
            grp.check_descendent_product(op, triples, tol),
        ])
    elif sub == "factorize":
        quads = grp.sample(n, samples, seed, arity=4)
        report = combine("factorize", [
            grp.check_factorization(op, [t[0] for t in quads], grp.DEFAULT_FACTOR_TOL if tol is None else tol),
            grp.check_phi(op, quads),
            grp.matched_pair_actions_check(op, [t[:3] for t in quads]),
        ])
    elif sub == "differentiate":
        if h <= 0:
            raise InputError("--h must be positive")
        inputs["h"] = h
        basis = [m.to_complex() for m in sl_basis(n)[1]]
        expected = np.array(iwasawa_operator_matrix(n, 1), dtype=float)
        report = grp.check_differential(op, basis, expected, h=h, tol=tol)
    else:
        raise InputError(f"unknown group command {sub!r}")
    return ff.report_dict(f"group {sub}", inputs, report, seed=seed), report.passed


# ---- catalog export

def _export_rb_bialgebra(rbbi: RBLieBialgebra) -> ff.AlgebraFile:
    return ff.AlgebraFile(rbbi.algebra, operator=rbbi.B, weight=rbbi.weight, dual=rbbi.dual)


def _export_rbmp(rbmp: RBMatchedPair) -> ff.AlgebraFile:
    mp = rbmp.mp
    return ff.AlgebraFile(mp.g, operator=rbmp.B, weight=rbmp.weight, second=mp.h, second_operator=rbmp.C,
                          rho=tuple(mp.rho.mats), mu=tuple(mp.mu.mats))


def _export_triple(rbmt: RBManinTriple) -> ff.AlgebraFile:
    mt = rbmt.triple
    return ff.AlgebraFile(mt.ambient, operator=rbmt.operator, weight=rbmt.weight, form=mt.S,
                          subalgebras=(mt.Pg, mt.Ph))


def exportable(lam=1) -> dict:
    """Catalog entries by export name, built lazily."""
    out = {
        "abelian2": lambda: ff.AlgebraFile(catalog.abelian(2)),
        "aff1": lambda: ff.AlgebraFile(catalog.aff1()),
        "sl2": lambda: ff.AlgebraFile(catalog.sl2()),
        "sl2_standard_r": lambda: ff.AlgebraFile(catalog.sl2(), rmatrix=catalog.sl2_r_components()),
        "sl2_standard_rb": lambda: _qrb_file(catalog.sl2_standard_r(lam).qrb),
    }
    for name in catalog.BIALGEBRA_NAMES:
        out[f"bialgebra-{name}"] = lambda name=name: _bialgebra_file(catalog.bialgebra(name))
        out[f"drinfeld_double-{name}"] = lambda name=name: _double_file(name, lam)
    for name in catalog.RB_BIALGEBRA_NAMES:
        out[f"rb_bialgebra-{name}"] = lambda name=name: _export_rb_bialgebra(catalog.rb_bialgebra(name, lam))
    for n in catalog.SUPPORTED_N:
        out[f"iwasawa_triple-{n}"] = lambda n=n: _export_triple(catalog.iwasawa_triple(n, lam))
        out[f"direct_sum_sl_n_triple-{n}"] = lambda n=n: _export_triple(catalog.direct_sum_sl_n_triple(n, lam))
    for name in catalog.rb_structures(lam):
        out[f"rb-{name}"] = lambda name=name: _rb_file(catalog.rb_structures(lam)[name])
    for name in catalog.rb_matched_pairs(lam):
        out[f"rb_matched_pair-{name}"] = lambda name=name: _export_rbmp(catalog.rb_matched_pairs(lam)[name])
    return out


def _qrb_file(qrb: QuadraticRBStructure) -> ff.AlgebraFile:
    return ff.AlgebraFile(qrb.algebra, operator=qrb.B, weight=qrb.weight, form=qrb.S)


def _rb_file(rb: RotaBaxterStructure) -> ff.AlgebraFile:
    return ff.AlgebraFile(rb.algebra, operator=rb.B, weight=rb.weight)


def _bialgebra_file(bi: LieBialgebra) -> ff.AlgebraFile:
    return ff.AlgebraFile(bi.algebra, dual=bi.dual)


def _double_file(name: str, lam) -> ff.AlgebraFile:
    d, r, _ = catalog.drinfeld_double_of(name, lam)
    return ff.AlgebraFile(d, rmatrix=r.r)


def cmd_export(name: str, lam=1) -> str:
    table = exportable(lam)
    if name not in table:
        raise InputError(f"unknown catalog entry {name!r}; see 'rotabaxter export --list'")
    return ff.dumps(table[name]())


# ---- argument parsing

def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rotabaxter", description="Exact checks and constructions for Rota-Baxter Lie algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run a check suite on an algebra file")
    c.add_argument("path")
    c.add_argument("which", choices=CHECKS)
    c.add_argument("--output", "-o", help="write the report here instead of stdout")

    b = sub.add_parser("build", help="construct a new algebra file")
    b.add_argument("path")
    b.add_argument("what", choices=BUILDS)
    b.add_argument("k", nargs="?", type=int, help="level for 'tower'")
    b.add_argument("--weight", type=_fraction, help="weight for rb-from-r and drinfeld-double (default: file weight or 1)")
    b.add_argument("--output", "-o")

    g = sub.add_parser("group", help="numeric checks on SL(n, C)")
    g.add_argument("sub", choices=GROUP_COMMANDS)
    g.add_argument("n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--tol", type=float)
    g.add_argument("--h", type=float, default=1e-4)
    g.add_argument("--samples", type=int, default=100)
    g.add_argument("--output", "-o")

    e = sub.add_parser("export", help="write a catalog entry as an algebra file")
    e.add_argument("name", nargs="?")
    e.add_argument("--weight", type=_fraction, default=Fraction(1))
    e.add_argument("--list", action="store_true", help="list exportable names")
    e.add_argument("--output", "-o")
    return p


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            doc, ok = cmd_check(args.path, args.which)
            _emit(ff.dumps_json(doc), args.output)
            return 0 if ok else 1
        if args.command == "group":
            doc, ok = cmd_group(args.sub, args.n, args.seed, args.tol, args.h, args.samples)
            _emit(ff.dumps_json(doc), args.output)
            return 0 if ok else 1
        if args.command == "build":
            _emit(cmd_build(args.path, args.what, args.k, args.weight), args.output)
            return 0
        if args.list:
            _emit("".join(f"{name}\n" for name in exportable(args.weight)), args.output)
            return 0
        if not args.name:
            raise InputError("export needs a catalog name (or --list)")
        _emit(cmd_export(args.name, args.weight), args.output)
        return 0
    except (InputError, ff.FormatError, RotaBaxterError, OSError) as exc:
        print(f"rotabaxter: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
