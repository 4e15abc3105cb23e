"""The compiled kernels must be byte-identical to the pure reference."""

import numpy as np
import pytest

from lrcdec.gf import field_new
from lrcdec.kernels import BACKEND, backend_module
from lrcdec.poly import UniPoly

py = backend_module("py")
try:
    cc = backend_module("c")
except RuntimeError:
    cc = None

needs_c = pytest.mark.skipif(cc is None, reason="compiled backend not built")


@pytest.fixture(scope="module")
def F():
    return field_new(6)


@needs_c
def test_eval_poly_many_agrees(F):
    rng = np.random.default_rng(0)
    for _ in range(100):
        deg = int(rng.integers(0, 30))
        coeffs = rng.integers(0, 64, deg + 1).astype(np.uint16)
        xs = rng.integers(0, 64, int(rng.integers(1, 70))).astype(np.uint16)
        a = py.eval_poly_many(F._log, F._alog2, coeffs, xs)
        b = cc.eval_poly_many(F._log, F._alog2, coeffs, xs)
        assert np.array_equal(a, b)


@needs_c
def test_dd_reduce_agrees(F):
    rng = np.random.default_rng(1)
    for _ in range(200):
        n = int(rng.integers(3, 63))
        delta = int(rng.integers(0, n - 1))
        alphas = rng.permutation(np.arange(64))[:n].astype(np.uint16)
        vals = rng.integers(0, 64, n).astype(np.uint16)
        v1, v2 = vals.copy(), vals.copy()
        py.dd_reduce_values(F._log, F._alog2, alphas, v1, delta)
        cc.dd_reduce_values(F._log, F._alog2, alphas, v2, delta)
        assert np.array_equal(v1, v2)


@needs_c
def test_gs_matrix_agrees(F):
    rng = np.random.default_rng(2)
    for _ in range(30):
        n = int(rng.integers(5, 25))
        s = int(rng.integers(1, 4))
        xs = rng.permutation(np.arange(1, 64))[:n].astype(np.uint16)
        ys = rng.integers(0, 64, n).astype(np.uint16)
        nmono = int(rng.integers(4, 40))
        mi = rng.integers(0, 12, nmono).astype(np.int64)
        mj = rng.integers(0, 6, nmono).astype(np.int64)
        a = py.gs_matrix(F._log, F._alog2, xs, ys, s, mi, mj)
        b = cc.gs_matrix(F._log, F._alog2, xs, ys, s, mi, mj)
        assert np.array_equal(a, b)


@needs_c
def test_nullspace_vector_agrees(F):
    rng = np.random.default_rng(3)
    for _ in range(100):
        rows = int(rng.integers(2, 40))
        cols = rows + int(rng.integers(1, 8))
        M = rng.integers(0, 64, (rows, cols)).astype(np.uint16)
        a = py.nullspace_vector(F._log, F._alog2, M.copy())
        b = cc.nullspace_vector(F._log, F._alog2, M.copy())
        assert (a is None) == (b is None)
        if a is not None:
            assert np.array_equal(a, b)


def _planted_bipoly(F, rng, roots):
    """Dense coefficient array for prod (y - f_i(x)) times a random cofactor."""
    terms = {(0, 0): 1}
    ydeg = 0
    for f in roots:
        new = {}
        for (i, j), c in terms.items():
            new[(i, j + 1)] = new.get((i, j + 1), 0) ^ c
            for d, fc in enumerate(f.coeffs):
                key = (i + d, j)
                new[key] = new.get(key, 0) ^ F.mul(c, fc)
        terms = {k: v for k, v in new.items() if v}
        ydeg += 1
    xdeg = max(i for i, _ in terms)
    dense = np.zeros((ydeg + 1, xdeg + 1), dtype=np.uint16)
    for (i, j), c in terms.items():
        dense[j, i] = c
    return dense


@needs_c
def test_rr_roots_agree_and_find_planted_roots(F):
    rng = np.random.default_rng(4)
    for trial in range(40):
        k = int(rng.integers(2, 6))
        nroots = int(rng.integers(1, 4))
        roots = []
        seen = set()
        for _ in range(nroots):
            deg = int(rng.integers(0, k))
            coeffs = tuple(int(c) for c in rng.integers(0, 64, deg + 1))
            f = UniPoly(F, coeffs)
            if f.coeffs not in seen:
                seen.add(f.coeffs)
                roots.append(f)
        dense = _planted_bipoly(F, rng, roots)
        got_py = py.rr_roots(F._log, F._alog2, dense, k)
        got_c = cc.rr_roots(F._log, F._alog2, dense, k)
        as_set = lambda out: {tuple(int(v) for v in row) for row in out}
        assert as_set(got_py) == as_set(got_c)
        planted = {
            tuple(list(f.coeffs) + [0] * (k - len(f.coeffs))) for f in roots
        }
        assert planted <= as_set(got_py)


def test_backend_module_rejects_unknown():
    with pytest.raises(ValueError):
        backend_module("fortran")


def test_active_backend_is_reported():
    assert BACKEND in ("c", "py")
