"""JSON documents for algebras and check reports.

Coefficients are rational strings (``"-1/2"``, ``"3"``) so nothing in the exact
pipeline ever touches a float.  Brackets are listed once per pair ``i < j``;
the parser fills in antisymmetry.

Document keys::

    version, name, dim, basis, brackets        always
    operator + weight                          Rota-Baxter operator
    form, rmatrix                              n x n matrices
    dual_brackets [, dual_basis]               bracket on the dual space
    second, rho, mu                            matched pair data
    subalgebras {"first", "second"}            Manin triple (columns span)

``second`` is a nested document (``name``, ``basis``, ``brackets`` and an
optional ``operator``) and ``rho``/``mu`` list one action matrix per basis
element of the acting algebra.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import exact as ex
from .bialgebra import dual_basis
from .core import LieAlgebra
from .report import CheckReport, jsonable

SCHEMA_VERSION = 1

_TOP_KEYS = {
    "version", "name", "dim", "basis", "brackets", "operator", "weight", "form", "rmatrix",
    "dual_brackets", "dual_basis", "second", "rho", "mu", "subalgebras",
}
_SECOND_KEYS = {"name", "dim", "basis", "brackets", "operator"}


class FormatError(ValueError):
    """Malformed document; ``field`` is a JSON path such as ``brackets[2][2]``."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


def fmt(x) -> str:
    return str(ex.q(x))


def _rational(value, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise FormatError(where, f"expected a rational string like \"-1/2\", got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise FormatError(where, f"expected a rational string, got {type(value).__name__}")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise FormatError(where, f"not a rational number: {value!r}") from None


def _matrix(value, rows: int, cols: int | None, where: str) -> np.ndarray:
    if not isinstance(value, list) or len(value) != rows:
        raise FormatError(where, f"expected a list of {rows} rows")
    width = cols
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise FormatError(f"{where}[{i}]", "expected a list")
        if width is None:
            width = len(row)
        if len(row) != width:
            raise FormatError(f"{where}[{i}]", f"expected {width} entries, got {len(row)}")
        out.append([_rational(v, f"{where}[{i}][{j}]") for j, v in enumerate(row)])
    return ex.qarray(out, (rows, width or 0))


def _names(value, where: str) -> list:
    if not isinstance(value, list) or not all(isinstance(b, str) and b for b in value):
        raise FormatError(where, "expected a list of nonempty strings")
    if len(set(value)) != len(value):
        raise FormatError(where, "basis names must be distinct")
    return value


def _brackets(value, basis: list, where: str) -> np.ndarray:
    """Structure constants from ``[xi, xj, coeff, xk]`` rows (no Jacobi check)."""
    n = len(basis)
    pos = {b: i for i, b in enumerate(basis)}
    if not isinstance(value, list):
        raise FormatError(where, "expected a list of [xi, xj, coeff, xk]")
    c = ex.zeros(n, n, n)
    seen = set()
    for r, row in enumerate(value):
        here = f"{where}[{r}]"
        if not isinstance(row, list) or len(row) != 4:
            raise FormatError(here, "expected [xi, xj, coeff, xk]")
        idx = []
        for col in (0, 1, 3):
            if row[col] not in pos:
                raise FormatError(f"{here}[{col}]", f"unknown basis element {row[col]!r}")
            idx.append(pos[row[col]])
        i, j, k = idx
        coeff = _rational(row[2], f"{here}[2]")
        if i == j:
            raise FormatError(here, "a basis element brackets to zero with itself")
        if i > j:
            i, j, coeff = j, i, -coeff
        if (i, j, k) in seen:
            raise FormatError(here, "duplicate entry")
        seen.add((i, j, k))
        c[i, j, k] = coeff
        c[j, i, k] = -coeff
    return c


def _algebra(doc: dict, where: str, keys: set) -> LieAlgebra:
    unknown = set(doc) - keys
    if unknown:
        raise FormatError(where + sorted(unknown)[0], "unknown key")
    for key in ("name", "basis", "brackets"):
        if key not in doc:
            raise FormatError(where + key, "missing")
    if not isinstance(doc["name"], str):
        raise FormatError(where + "name", "expected a string")
    basis = _names(doc["basis"], where + "basis")
    if "dim" in doc and doc["dim"] != len(basis):
        raise FormatError(where + "dim", f"dim {doc['dim']!r} but {len(basis)} basis names")
    c = _brackets(doc["brackets"], basis, where + "brackets")
    return LieAlgebra(c, basis, doc["name"], validate=False)


@dataclass(frozen=True)
class AlgebraFile:
    """Parsed document.  Algebras are built without the Jacobi check so a
    broken file can still be diagnosed by ``check jacobi``."""

    algebra: LieAlgebra
    operator: np.ndarray | None = None
    weight: Fraction | None = None
    form: np.ndarray | None = None
    rmatrix: np.ndarray | None = None
    dual: LieAlgebra | None = None
    second: LieAlgebra | None = None
    second_operator: np.ndarray | None = None
    rho: tuple | None = None
    mu: tuple | None = None
    subalgebras: tuple | None = None

    @property
    def name(self) -> str:
        return self.algebra.name

    def with_(self, **changes) -> "AlgebraFile":
        return replace(self, **changes)

    def require(self, *blocks: str) -> None:
        for b in blocks:
            if getattr(self, b) is None:
                raise FormatError(b, "required block missing")

    def default_dual_basis(self) -> list:
        return dual_basis(self.algebra)


def parse(text: str) -> AlgebraFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return from_dict(doc)


def from_dict(doc) -> AlgebraFile:
    if not isinstance(doc, dict):
        raise FormatError("", "top level must be a JSON object")
    version = doc.get("version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise FormatError("version", f"unsupported version {version!r}")
    L = _algebra(doc, "", _TOP_KEYS)
    n = L.dim
    out: dict = {"algebra": L}
    if "operator" in doc:
        out["operator"] = _matrix(doc["operator"], n, n, "operator")
        if "weight" not in doc:
            raise FormatError("weight", "an operator needs a weight")
    if "weight" in doc:
        out["weight"] = _rational(doc["weight"], "weight")
    for key in ("form", "rmatrix"):
        if key in doc:
            out[key] = _matrix(doc[key], n, n, key)
    if "dual_basis" in doc and "dual_brackets" not in doc:
        raise FormatError("dual_basis", "given without dual_brackets")
    if "dual_brackets" in doc:
        names = _names(doc["dual_basis"], "dual_basis") if "dual_basis" in doc else dual_basis(L)
        if len(names) != n:
            raise FormatError("dual_basis", f"expected {n} names")
        c = _brackets(doc["dual_brackets"], names, "dual_brackets")
        out["dual"] = LieAlgebra(c, names, f"{L.name}*", validate=False)
    if "second" in doc:
        sec = doc["second"]
        if not isinstance(sec, dict):
            raise FormatError("second", "expected an object")
        h = _algebra(sec, "second.", _SECOND_KEYS)
        out["second"] = h
        if "operator" in sec:
            out["second_operator"] = _matrix(sec["operator"], h.dim, h.dim, "second.operator")
        for key, acting, target in (("rho", L, h), ("mu", h, L)):
            if key not in doc:
                raise FormatError(key, "matched pair data needs both rho and mu")
            mats = doc[key]
            if not isinstance(mats, list) or len(mats) != acting.dim:
                raise FormatError(key, f"expected {acting.dim} matrices")
            out[key] = tuple(_matrix(m, target.dim, target.dim, f"{key}[{i}]") for i, m in enumerate(mats))
    elif "rho" in doc or "mu" in doc:
        raise FormatError("rho" if "rho" in doc else "mu", "given without second")
    if "subalgebras" in doc:
        sub = doc["subalgebras"]
        if not isinstance(sub, dict) or set(sub) != {"first", "second"}:
            raise FormatError("subalgebras", "expected {\"first\": ..., \"second\": ...}")
        Pg = _matrix(sub["first"], n, None, "subalgebras.first")
        Ph = _matrix(sub["second"], n, None, "subalgebras.second")
        out["subalgebras"] = (Pg, Ph)
    return AlgebraFile(**out)


def _matrix_out(M) -> list:
    return [[fmt(v) for v in row] for row in np.asarray(M)]


def _brackets_out(L: LieAlgebra) -> list:
    return [[L.basis[i], L.basis[j], fmt(v), L.basis[k]] for i, j, v, k in L.brackets()]


def _algebra_out(L: LieAlgebra) -> dict:
    return {"name": L.name, "dim": L.dim, "basis": list(L.basis), "brackets": _brackets_out(L)}


def to_dict(f: AlgebraFile) -> dict:
    doc = {"version": SCHEMA_VERSION, **_algebra_out(f.algebra)}
    if f.operator is not None:
        doc["operator"] = _matrix_out(f.operator)
    if f.weight is not None:
        doc["weight"] = fmt(f.weight)
    if f.form is not None:
        doc["form"] = _matrix_out(f.form)
    if f.rmatrix is not None:
        doc["rmatrix"] = _matrix_out(f.rmatrix)
    if f.dual is not None:
        doc["dual_brackets"] = _brackets_out(f.dual)
        if list(f.dual.basis) != f.default_dual_basis():
            doc["dual_basis"] = list(f.dual.basis)
    if f.second is not None:
        sec = _algebra_out(f.second)
        if f.second_operator is not None:
            sec["operator"] = _matrix_out(f.second_operator)
        doc["second"] = sec
        doc["rho"] = [_matrix_out(m) for m in f.rho]
        doc["mu"] = [_matrix_out(m) for m in f.mu]
    if f.subalgebras is not None:
        doc["subalgebras"] = {"first": _matrix_out(f.subalgebras[0]), "second": _matrix_out(f.subalgebras[1])}
    return doc


def dumps_json(doc) -> str:
    """Canonical text: sorted keys, two-space indent, UTF-8, final newline."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def dumps(f: AlgebraFile) -> str:
    return dumps_json(to_dict(f))


def canonicalize(text: str) -> str:
    return dumps(parse(text))


def read(path) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write(path, f: AlgebraFile) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(f))


def report_dict(command: str, inputs: dict, report: CheckReport, seed=None) -> dict:
    """Report document; one entry per leaf check, in evaluation order."""
    doc = {
        "version": SCHEMA_VERSION,
        "command": command,
        "inputs": jsonable(inputs),
        "pass": report.passed,
        "checks": [leaf.to_dict() for leaf in report.flatten()],
    }
    if seed is not None:
        doc["seed"] = seed
    return doc
