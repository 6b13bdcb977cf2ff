"""Brute-force reference computations on nested lists of Fractions.

Nothing here imports the package: every formula is written out from the
definitions, one basis element at a time, so agreement with the library is
evidence rather than tautology.
"""
from fractions import Fraction
from itertools import product


def F(x):
    return Fraction(x)


def tolist(a):
    """Nested lists of Fractions from an array or nested sequence."""
    if hasattr(a, "tolist"):
        a = a.tolist()
    if isinstance(a, (list, tuple)):
        return [tolist(v) for v in a]
    return Fraction(a)


def vec_zero(n):
    return [F(0)] * n


def add(u, v, s=1):
    return [a + s * b for a, b in zip(u, v)]


def scale(s, u):
    return [s * a for a in u]


def unit(n, i):
    v = vec_zero(n)
    v[i] = F(1)
    return v


def bracket(c, x, y):
    n = len(c)
    out = vec_zero(n)
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * c[i][j][k]
    return out


def apply(M, x):
    return [sum((M[i][j] * x[j] for j in range(len(x))), F(0)) for i in range(len(M))]


def transpose(M):
    return [list(r) for r in zip(*M)]


def matmul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), F(0)) for j in range(len(B[0]))] for i in range(len(A))]


def jacobi_failures(c):
    """All ``(i, j, k)`` with a nonzero Jacobi sum, plus antisymmetry breaks."""
    n = len(c)
    bad = []
    for i, j in product(range(n), repeat=2):
        if any(c[i][j][k] + c[j][i][k] != 0 for k in range(n)):
            bad.append(("anti", i, j))
    for i, j, k in product(range(n), repeat=3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        s = add(add(bracket(c, x, bracket(c, y, z)), bracket(c, y, bracket(c, z, x))), bracket(c, z, bracket(c, x, y)))
        if any(s):
            bad.append(("jacobi", i, j, k))
    return bad


def jacobi_sum(c, i, j, k):
    """``[[x_i, x_j], x_k] + [[x_j, x_k], x_i] + [[x_k, x_i], x_j]``."""
    n = len(c)
    x, y, z = unit(n, i), unit(n, j), unit(n, k)
    return add(add(bracket(c, bracket(c, x, y), z), bracket(c, bracket(c, y, z), x)), bracket(c, bracket(c, z, x), y))


def is_lie(c):
    return not jacobi_failures(c)


def rb_failures(c, B, lam):
    """Basis pairs where ``[Bx, By] != B([Bx, y] + [x, By] + lam [x, y])``."""
    n = len(c)
    lam = F(lam)
    bad = []
    for i, j in product(range(n), repeat=2):
        x, y = unit(n, i), unit(n, j)
        Bx, By = apply(B, x), apply(B, y)
        lhs = bracket(c, Bx, By)
        inner = add(add(bracket(c, Bx, y), bracket(c, x, By)), scale(lam, bracket(c, x, y)))
        rhs = apply(B, inner)
        if lhs != rhs:
            bad.append((i, j, add(lhs, rhs, -1)))
    return bad


def descendent(c, B, lam):
    n = len(c)
    out = [[vec_zero(n) for _ in range(n)] for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        x, y = unit(n, i), unit(n, j)
        out[i][j] = add(add(bracket(c, apply(B, x), y), bracket(c, x, apply(B, y))), scale(F(lam), bracket(c, x, y)))
    return out


def form(S, x, y):
    n = len(x)
    return sum((x[i] * S[i][j] * y[j] for i in range(n) for j in range(n)), F(0))


def is_invariant(c, S):
    n = len(c)
    for i, j, k in product(range(n), repeat=3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        if form(S, bracket(c, x, y), z) + form(S, y, bracket(c, x, z)) != 0:
            return False
    return True


def det(M):
    """Fraction-exact determinant by elimination."""
    A = [list(map(F, r)) for r in M]
    n = len(A)
    d = F(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return F(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            d = -d
        d *= A[col][col]
        for r in range(col + 1, n):
            f = A[r][col] / A[col][col]
            A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return d


def is_quadratic_rb(c, B, S, lam):
    n = len(c)
    if any(S[i][j] != S[j][i] for i in range(n) for j in range(n)) or det(S) == 0:
        return False
    if not is_invariant(c, S):
        return False
    for i, j in product(range(n), repeat=2):
        x, y = unit(n, i), unit(n, j)
        if form(S, x, apply(B, y)) + form(S, apply(B, x), y) + F(lam) * form(S, x, y) != 0:
            return False
    return True


# ---- tensors in g (x) g as n x n coefficient lists, g (x) g (x) g as n^3

def cybe(c, r):
    """``[r12, r13] + [r12, r23] + [r13, r23]`` with ``r = sum r[i][j] x_i (x) x_j``."""
    n = len(c)
    T = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, l in product(range(n), repeat=4):
        a = r[i][j] * r[k][l]
        if a == 0:
            continue
        for m in range(n):
            T[m][j][l] += a * c[i][k][m]  # [x_i, x_k] (x) x_j (x) x_l
            T[i][m][l] += a * c[j][k][m]  # x_i (x) [x_j, x_k] (x) x_l
            T[i][k][m] += a * c[j][l][m]  # x_i (x) x_k (x) [x_j, x_l]
    return T


def ad_on_tensor(c, x, t):
    """``(ad_x (x) 1 + 1 (x) ad_x) t`` for ``t`` in g (x) g."""
    n = len(c)
    out = [[F(0)] * n for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        if t[i][j] == 0:
            continue
        u = bracket(c, x, unit(n, i))
        v = bracket(c, x, unit(n, j))
        for m in range(n):
            out[m][j] += t[i][j] * u[m]
            out[i][m] += t[i][j] * v[m]
    return out


def is_zero(t):
    if isinstance(t, list):
        return all(is_zero(v) for v in t)
    return t == 0


def delta_r(c, r, k):
    """Cobracket ``delta(x_k) = [x_k (x) 1 + 1 (x) x_k, r]``."""
    return ad_on_tensor(c, unit(len(c), k), r)


def dual_constants_from_r(c, r):
    """``[xi_i, xi_j](x_k) = <xi_i (x) xi_j, delta(x_k)>``."""
    n = len(c)
    d = [[[F(0)] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        t = delta_r(c, r, k)
        for i, j in product(range(n), repeat=2):
            d[i][j][k] = t[i][j]
    return d


def cocycle_failures(c, d):
    """Pairs ``(a, b)`` with ``delta[x_a, x_b] != x_a . delta(x_b) - x_b . delta(x_a)``
    where ``delta(x_k) = sum d[i][j][k] x_i (x) x_j``."""
    n = len(c)

    def delta(v):
        out = [[F(0)] * n for _ in range(n)]
        for k in range(n):
            if v[k] == 0:
                continue
            for i, j in product(range(n), repeat=2):
                out[i][j] += v[k] * d[i][j][k]
        return out

    bad = []
    for a, b in product(range(n), repeat=2):
        xa, xb = unit(n, a), unit(n, b)
        lhs = delta(bracket(c, xa, xb))
        r1 = ad_on_tensor(c, xa, delta(xb))
        r2 = ad_on_tensor(c, xb, delta(xa))
        rhs = [[r1[i][j] - r2[i][j] for j in range(n)] for i in range(n)]
        if lhs != rhs:
            bad.append((a, b))
    return bad


def bowtie(cg, ch, rho, mu):
    """Constants of ``g + h`` with ``[(x, a), (y, b)] = ([x, y] + mu(a) y - mu(b) x,
    [a, b] + rho(x) b - rho(y) a)``; ``rho[i]`` acts on h, ``mu[a]`` on g."""
    n, m = len(cg), len(ch)
    N = n + m

    def br(u, v):
        x, a = u[:n], u[n:]
        y, b = v[:n], v[n:]
        gx = bracket(cg, x, y)
        ha = bracket(ch, a, b)
        for p in range(m):
            gx = add(gx, scale(a[p], apply(mu[p], y)))
            gx = add(gx, scale(b[p], apply(mu[p], x)), -1)
        for i in range(n):
            ha = add(ha, scale(x[i], apply(rho[i], b)))
            ha = add(ha, scale(y[i], apply(rho[i], a)), -1)
        return gx + ha

    return [[br(unit(N, i), unit(N, j)) for j in range(N)] for i in range(N)]


def adjoint_mats(c):
    """``ad(x_i)`` as matrices on coordinate columns."""
    n = len(c)
    return [[[c[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]


def coadjoint_mats(c):
    """``ad*(x_i) = -ad(x_i)^T``."""
    return [[[-v for v in row] for row in transpose(A)] for A in adjoint_mats(c)]
