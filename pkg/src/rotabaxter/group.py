"""Weight-one Rota-Baxter operators on matrix groups, in floating point.

The Iwasawa factorization ``g = k b`` (``k`` in SU(n), ``b`` upper triangular
with positive diagonal) gives the operator ``B(g) = b^{-1}``.  Everything here
works on complex ``numpy`` arrays; checks report the largest Frobenius
residual over a sample set.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import expm

from .report import CheckReport, combine

DEFAULT_RB_TOL = 1e-10
DEFAULT_FACTOR_TOL = 1e-12
DEFAULT_ACTION_TOL = 1e-9


@dataclass(frozen=True)
class GroupOperator:
    name: str
    func: Callable[[np.ndarray], np.ndarray]
    n: int
    tol: float = DEFAULT_RB_TOL

    def __call__(self, g) -> np.ndarray:
        return self.func(np.asarray(g, dtype=complex))


def _fro(a) -> float:
    return float(np.linalg.norm(np.ravel(a)))


def iwasawa(g):
    """``(k, b)`` with ``g = k b``, ``k`` unitary and ``b`` upper triangular
    with positive real diagonal."""
    g = np.asarray(g, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise ValueError("expected a square matrix")
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    if np.any(np.abs(d) <= np.finfo(float).eps * max(1.0, np.abs(r).max())):
        raise np.linalg.LinAlgError("matrix is singular")
    ph = d / np.abs(d)
    k = q * ph[np.newaxis, :]
    b = np.conj(ph)[:, np.newaxis] * r
    return k, b


def gram_schmidt_iwasawa(g):
    """Same factorization by classical Gram-Schmidt on the columns; slower,
    used as an independent check of :func:`iwasawa`."""
    g = np.asarray(g, dtype=complex)
    n = g.shape[0]
    k = np.zeros_like(g)
    b = np.zeros_like(g)
    for j in range(n):
        v = g[:, j].copy()
        for i in range(j):
            b[i, j] = np.vdot(k[:, i], g[:, j])
            v = v - b[i, j] * k[:, i]
        b[j, j] = np.linalg.norm(v)
        k[:, j] = v / b[j, j]
    return k, b


def iwasawa_operator(n: int, tol: float = DEFAULT_RB_TOL) -> GroupOperator:
    if n < 2:
        raise ValueError("n must be at least 2")

    def op(g):
        _, b = iwasawa(g)
        return np.linalg.inv(b)

    return GroupOperator(f"iwasawa({n})", op, n, tol)


def identity_operator(n: int) -> GroupOperator:
    return GroupOperator("identity", lambda g: np.eye(n, dtype=complex), n)


def transposed_iwasawa_operator(n: int) -> GroupOperator:
    """Deliberately broken: uses the transpose of the triangular factor."""

    def op(g):
        _, b = iwasawa(g)
        return np.linalg.inv(b.T)

    return GroupOperator(f"transposed-iwasawa({n})", op, n)


def random_sl(n: int, rng: np.random.Generator, box: float = 1.0, max_cond: float = 1e3) -> np.ndarray:
    """Entries uniform in the box (real and imaginary parts), scaled to
    determinant one; redrawn until the condition number is at most ``max_cond``."""
    while True:
        g = rng.uniform(-box, box, (n, n)) + 1j * rng.uniform(-box, box, (n, n))
        d = np.linalg.det(g)
        if abs(d) < 1e-12:
            continue
        g = g / d ** (1.0 / n)
        if np.linalg.cond(g) <= max_cond:
            return g


def sample(n: int, count: int, seed: int, arity: int = 1, max_cond: float = 1e3) -> list:
    """``count`` tuples of ``arity`` random SL(n, C) elements."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        items = tuple(random_sl(n, rng, max_cond=max_cond) for _ in range(arity))
        out.append(items if arity > 1 else items[0])
    return out


def _max_report(name: str, residuals, tol: float) -> CheckReport:
    residuals = list(residuals)
    if not residuals:
        return CheckReport.ok(name)
    worst = int(np.argmax(residuals))
    top = float(residuals[worst])
    if top <= tol:
        return CheckReport(name, True, None, top)
    return CheckReport.fail(name, worst, top)


def rb_group_residual(op: GroupOperator, g1, g2) -> float:
    """``|| B(g1) B(g2) - B(g1 B(g1) g2 B(g1)^{-1}) ||_F``."""
    b1 = op(g1)
    lhs = b1 @ op(g2)
    rhs = op(g1 @ b1 @ g2 @ np.linalg.inv(b1))
    return _fro(lhs - rhs)


def check_rb_group(op: GroupOperator, samples, tol: float | None = None) -> CheckReport:
    tol = op.tol if tol is None else tol
    return _max_report("rb_group", (rb_group_residual(op, g1, g2) for g1, g2 in samples), tol)


def descendent_product(op: GroupOperator, g, h) -> np.ndarray:
    """``g * h = g B(g) h B(g)^{-1}``."""
    g = np.asarray(g, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if g.shape != h.shape:
        raise ValueError("elements of different groups")
    b = op(g)
    return g @ b @ h @ np.linalg.inv(b)


def check_descendent_product(op: GroupOperator, triples, tol: float | None = None) -> CheckReport:
    """Associativity of the descendent product and ``B(g * h) = B(g) B(h)``."""
    tol = op.tol if tol is None else tol
    assoc, homo = [], []
    for g, h, k in triples:
        left = descendent_product(op, descendent_product(op, g, h), k)
        right = descendent_product(op, g, descendent_product(op, h, k))
        assoc.append(_fro(left - right))
        homo.append(_fro(op(descendent_product(op, g, h)) - op(g) @ op(h)))
    return combine("descendent_product", [
        _max_report("associativity", assoc, tol),
        _max_report("homomorphism", homo, tol),
    ])


def group_factorize(op: GroupOperator, g):
    """``(g_plus, g_minus) = (g B(g), B(g))`` so that ``g = g_plus g_minus^{-1}``."""
    g = np.asarray(g, dtype=complex)
    b = op(g)
    return g @ b, b


def factorization_residuals(op: GroupOperator, g) -> dict:
    gp, gm = group_factorize(op, g)
    n = gp.shape[0]
    eye = np.eye(n)
    d = np.diag(gm)
    return {
        "reconstruction": _fro(gp @ np.linalg.inv(gm) - g),
        "unitary": _fro(gp.conj().T @ gp - eye),
        "special": abs(np.linalg.det(gp) - 1),
        "triangular": _fro(np.tril(gm, -1)),
        "positive_diagonal": float(np.max(np.abs(d.imag)) + max(0.0, -float(np.min(d.real)))),
    }


def check_factorization(op: GroupOperator, samples, tol: float = DEFAULT_FACTOR_TOL,
                        factor_tol: float = DEFAULT_RB_TOL) -> CheckReport:
    res = [factorization_residuals(op, g) for g in samples]
    return combine("factorization", [
        _max_report("reconstruction", (r["reconstruction"] for r in res), tol),
        _max_report("unitary", (r["unitary"] for r in res), factor_tol),
        _max_report("special", (r["special"] for r in res), factor_tol),
        _max_report("triangular", (r["triangular"] for r in res), factor_tol),
        _max_report("positive_diagonal", (r["positive_diagonal"] for r in res), factor_tol),
    ])


def phi_map(op: GroupOperator, s, g):
    """``(s B(s) g, B(s) g)``."""
    s = np.asarray(s, dtype=complex)
    g = np.asarray(g, dtype=complex)
    if s.shape != g.shape:
        raise ValueError("elements of different groups")
    b = op(s)
    return s @ b @ g, b @ g


def double_product(op: GroupOperator, a, b):
    """Product on pairs ``(s, g)`` whose first factor carries the descendent
    product: ``(s * (g t g^{-1}), B(g t g^{-1})^{-1} g B(t) h)``."""
    s, g = a
    t, h = b
    c = g @ t @ np.linalg.inv(g)
    return descendent_product(op, s, c), np.linalg.inv(op(c)) @ g @ op(t) @ h


def phi_homomorphism_residual(op: GroupOperator, s, g, t, h) -> float:
    left = phi_map(op, *double_product(op, (s, g), (t, h)))
    p1, p2 = phi_map(op, s, g)
    q1, q2 = phi_map(op, t, h)
    return max(_fro(left[0] - p1 @ q1), _fro(left[1] - p2 @ q2))


def check_phi(op: GroupOperator, quadruples, tol: float = DEFAULT_ACTION_TOL) -> CheckReport:
    return _max_report("phi_homomorphism", (phi_homomorphism_residual(op, *q) for q in quadruples), tol)


def act_left(op: GroupOperator, g, s) -> np.ndarray:
    """``g |> s = g s g^{-1}``."""
    return g @ s @ np.linalg.inv(g)


def act_right(op: GroupOperator, g, s) -> np.ndarray:
    """``g <| s = B(g s g^{-1})^{-1} g B(s)``."""
    return np.linalg.inv(op(g @ s @ np.linalg.inv(g))) @ g @ op(s)


def matched_pair_residuals(op: GroupOperator, p, q1, q2):
    """Residuals of the two matched-pair axioms.  ``p`` acts, ``q1, q2``
    multiply with the descendent product; in the second axiom ``p, q1`` are
    the ordinary factors and ``q2`` is acted on."""
    star = lambda a, b: descendent_product(op, a, b)
    left1 = act_left(op, p, star(q1, q2))
    right1 = star(act_left(op, p, q1), act_left(op, act_right(op, p, q1), q2))
    p1, p2, q = p, q1, q2
    left2 = act_right(op, p1 @ p2, q)
    right2 = act_right(op, p1, act_left(op, p2, q)) @ act_right(op, p2, q)
    return _fro(left1 - right1), _fro(left2 - right2)


def matched_pair_actions_check(op: GroupOperator, samples, tol: float = DEFAULT_ACTION_TOL) -> CheckReport:
    res = [matched_pair_residuals(op, *t) for t in samples]
    return combine("group_matched_pair", [
        _max_report("mpg1", (r[0] for r in res), tol),
        _max_report("mpg2", (r[1] for r in res), tol),
    ])


def realify(mats) -> np.ndarray:
    """Columns ``[Re vec(X); Im vec(X)]`` for each complex matrix."""
    cols = [np.concatenate([np.asarray(m).real.ravel(), np.asarray(m).imag.ravel()]) for m in mats]
    return np.stack(cols, axis=1)


def differentiate_operator(op: GroupOperator, basis, h: float = 1e-4) -> np.ndarray:
    """Central-difference matrix of the differential at the identity, in the
    coordinates of ``basis`` (complex matrices spanning a real Lie algebra)."""
    if h <= 0:
        raise ValueError("step must be positive")
    if h < 1e-7:
        raise ValueError("step too small: rounding error dominates the difference quotient")
    basis = [np.asarray(X, dtype=complex) for X in basis]
    A = realify(basis)
    cols = []
    for X in basis:
        D = (op(expm(h * X)) - op(expm(-h * X))) / (2 * h)
        coef, *_ = np.linalg.lstsq(A, realify([D])[:, 0], rcond=None)
        fit = _fro(A @ coef - realify([D])[:, 0])
        if fit > 1e-6 * max(1.0, _fro(D)):
            raise ValueError("derivative leaves the span of the basis; step too small or basis incomplete")
        cols.append(coef)
    return np.stack(cols, axis=1)


def differentiation_error(op: GroupOperator, basis, expected, h: float) -> float:
    B = differentiate_operator(op, basis, h)
    return float(np.max(np.abs(B - np.asarray(expected, dtype=float))))


def check_differential(op: GroupOperator, basis, expected, h: float = 1e-4, tol: float | None = None,
                       rate_h: float | None = None, min_ratio: float = 3.5) -> CheckReport:
    """Agreement within ``10 h^2 + 1e-8`` (or ``tol``), and second-order
    convergence: halving ``rate_h`` (default ``h``) must shrink the error by
    ``min_ratio``."""
    tol = 10 * h * h + 1e-8 if tol is None else tol
    rate_h = h if rate_h is None else rate_h
    err = differentiation_error(op, basis, expected, h)
    agree = CheckReport("differential", err <= tol, None if err <= tol else h, err)
    e1 = differentiation_error(op, basis, expected, rate_h)
    e2 = differentiation_error(op, basis, expected, rate_h / 2)
    if e1 <= 1e-13:
        rate = CheckReport("second_order", True, None, 0.0)
    else:
        ratio = e1 / max(e2, 1e-300)
        rate = CheckReport("second_order", ratio >= min_ratio, None if ratio >= min_ratio else rate_h, ratio)
    return combine("differentiate", [agree, rate])
