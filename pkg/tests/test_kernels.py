import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rotabaxter import exact as ex
from rotabaxter import kernels
from rotabaxter.catalog import sl2

BACKENDS = kernels.available_backends()

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def _arr(shape, values):
    return np.array(values, dtype=object).reshape(shape)


def _plain_matmul(A, B):
    return np.array([[sum((A[i, k] * B[k, j] for k in range(A.shape[1])), Fraction(0))
                      for j in range(B.shape[1])] for i in range(A.shape[0])], dtype=object)


def test_compiled_backend_is_built():
    # the editable install compiles the extension; the fallback stays available
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def test_pure_python_switch():
    code = "import rotabaxter.kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"ROTABAXTER_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_matmul_matches_plain_python(n, m, p, data):
    A = _arr((n, m), data.draw(st.lists(fractions, min_size=n * m, max_size=n * m)))
    B = _arr((m, p), data.draw(st.lists(fractions, min_size=m * p, max_size=m * p)))
    want = _plain_matmul(A, B)
    for backend in BACKENDS:
        assert ex.equal(kernels.matmul(A, B, backend=backend), want)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.data())
def test_pullback_matches_einsum_definition(n, data):
    C = _arr((n, n, n), data.draw(st.lists(fractions, min_size=n ** 3, max_size=n ** 3)))
    A = _arr((n, n), data.draw(st.lists(fractions, min_size=n * n, max_size=n * n)))
    B = _arr((n, n), data.draw(st.lists(fractions, min_size=n * n, max_size=n * n)))
    want = np.einsum("ai,bj,abk->ijk", A, B, C)
    for backend in BACKENDS:
        assert ex.equal(kernels.pullback(C, A, B, backend=backend), want)
    assert ex.equal(kernels.einsum("ai,bj,abk->ijk", A, B, C), want)


def test_backends_agree_on_jacobi_witness():
    c = sl2().c.copy()
    c[0, 1, 1], c[1, 0, 1] = Fraction(3), Fraction(-3)
    hits = {b: kernels.jacobi_violation(c, backend=b) for b in BACKENDS}
    assert set(hits.values()) == {(0, 1, 2, 0, Fraction(1))}
    assert all(kernels.jacobi_violation(sl2().c, backend=b) is None for b in BACKENDS)


def test_large_entries_fall_back_to_python_ints():
    big = 2 ** 40
    A = _arr((2, 2), [big, 1, 1, big])
    want = _plain_matmul(A, A)
    for backend in BACKENDS:
        assert ex.equal(kernels.matmul(A, A, backend=backend), want)
    assert want[0, 0] == 2 ** 80 + 1


def test_einsum_large_entries_exact():
    A = _arr((2, 2), [2 ** 40, 1, 1, 2 ** 40])
    out = kernels.einsum("ij,jk->ik", A, A)
    assert out[0, 0] == 2 ** 80 + 1


def test_shape_errors():
    with pytest.raises(ValueError):
        kernels.matmul(ex.zeros(2, 3), ex.zeros(2, 3))
    with pytest.raises(ValueError):
        kernels.matmul(ex.eye(2), ex.eye(2), backend="fortran")
