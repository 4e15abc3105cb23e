import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrcdec.errors import ParameterError
from lrcdec.gf import field_new
from lrcdec.poly import (
    BiPoly,
    UniPoly,
    divided_difference_reduce,
    interpolate,
    newton_reconstruct,
)


def rand_poly(F, rng, max_deg):
    deg = int(rng.integers(0, max_deg + 1))
    coeffs = [int(rng.integers(0, F.q)) for _ in range(deg)]
    coeffs.append(int(rng.integers(1, F.q)))
    return UniPoly(F, tuple(coeffs))


def test_mul_matches_convolution_oracle():
    F = field_new(4)
    rng = np.random.default_rng(0)
    for _ in range(100):
        f, g = rand_poly(F, rng, 6), rand_poly(F, rng, 6)
        prod = f * g
        want = [0] * (f.degree + g.degree + 1)
        for i, a in enumerate(f.coeffs):
            for j, b in enumerate(g.coeffs):
                want[i + j] ^= F.mul(a, b)
        while want and want[-1] == 0:
            want.pop()
        assert list(prod.coeffs) == want


def test_add_is_coefficientwise_xor():
    F = field_new(3)
    f = UniPoly(F, (1, 2, 3))
    g = UniPoly(F, (4, 2))
    assert (f + g).coeffs == (5, 0, 3)
    assert (f - g).coeffs == (f + g).coeffs
    assert (f + f).is_zero


def test_divrem_reconstructs_dividend():
    F = field_new(4)
    rng = np.random.default_rng(1)
    for _ in range(100):
        f, g = rand_poly(F, rng, 10), rand_poly(F, rng, 5)
        q, r = f.divrem(g)
        assert r.degree < g.degree
        assert (q * g + r).coeffs == f.coeffs
    with pytest.raises(ZeroDivisionError):
        f.divrem(UniPoly.zero(F))


def test_eval_scalar_and_vector_agree():
    F = field_new(6)
    rng = np.random.default_rng(2)
    f = rand_poly(F, rng, 9)
    xs = np.arange(64, dtype=np.uint16)
    ys = f.eval_many(xs)
    for x in range(64):
        assert f(x) == int(ys[x])


def test_interpolate_recovers_polynomial():
    F = field_new(5)
    rng = np.random.default_rng(3)
    for _ in range(50):
        f = rand_poly(F, rng, 7)
        xs = rng.permutation(np.arange(32))[: f.degree + 1 + int(rng.integers(0, 5))]
        pts = [(int(x), f(int(x))) for x in xs]
        g = interpolate(F, pts)
        assert g.coeffs == f.coeffs


def test_interpolate_matches_values_at_nodes():
    F = field_new(4)
    rng = np.random.default_rng(4)
    xs = rng.permutation(np.arange(16))[:9]
    pts = [(int(x), int(rng.integers(0, 16))) for x in xs]
    g = interpolate(F, pts)
    for x, y in pts:
        assert g(x) == y
    assert g.degree < len(pts)


def test_interpolate_rejects_duplicate_nodes():
    F = field_new(4)
    with pytest.raises(ParameterError):
        interpolate(F, [(1, 2), (1, 3)])


def naive_peel(f, alphas):
    """One reduction step by synthetic division, the slow way."""
    F = f.field
    c = f(alphas[0])
    g = f + UniPoly.constant(F, c)
    q, r = g.divrem(UniPoly(F, (alphas[0], 1)))
    assert r.is_zero
    return q, c


def test_reduce_matches_naive_peeling():
    F = field_new(4)
    rng = np.random.default_rng(5)
    for _ in range(50):
        f = rand_poly(F, rng, 8)
        s = min(5, f.degree + 1)
        alphas = [int(a) for a in rng.permutation(np.arange(1, 16))[:s]]
        reduced, consts = divided_difference_reduce(f, alphas, len(alphas))
        cur = f
        want = []
        for a in alphas:
            cur, c = naive_peel(cur, [a])
            want.append(c)
        assert list(consts) == want
        assert reduced.coeffs == cur.coeffs


def test_reduce_then_reconstruct_roundtrip():
    F = field_new(6)
    rng = np.random.default_rng(6)
    for _ in range(50):
        f = rand_poly(F, rng, 12)
        s = int(rng.integers(1, min(f.degree + 2, 8)))
        alphas = [int(a) for a in rng.permutation(np.arange(64))[:s]]
        reduced, consts = divided_difference_reduce(f, alphas, s)
        assert reduced.degree == f.degree - s or (reduced.is_zero and f.degree < s)
        back = newton_reconstruct(reduced, alphas, consts)
        assert back.coeffs == f.coeffs


def test_reduce_nested_evaluation_identity():
    # f(x) = c_0 + (x - a_0)(c_1 + (x - a_1)(... + (x - a_{s-1}) f_s(x)))
    F = field_new(5)
    rng = np.random.default_rng(7)
    f = rand_poly(F, rng, 10)
    alphas = [int(a) for a in rng.permutation(np.arange(32))[:4]]
    reduced, consts = divided_difference_reduce(f, alphas, 4)
    for x in range(32):
        acc = reduced(x)
        for a, c in zip(reversed(alphas), reversed(list(consts))):
            acc = F.add(c, F.mul(F.add(x, a), acc))
        assert acc == f(x)


def test_reduce_to_nothing_gives_zero_polynomial():
    F = field_new(4)
    f = UniPoly(F, (3, 1, 7))
    alphas = [1, 2, 5]
    reduced, consts = divided_difference_reduce(f, alphas, 3)
    assert reduced.is_zero
    assert newton_reconstruct(reduced, alphas, consts).coeffs == f.coeffs


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_reduce_roundtrip_property(data):
    F = field_new(4)
    deg = data.draw(st.integers(0, 10))
    coeffs = tuple(data.draw(st.integers(0, 15)) for _ in range(deg)) + (
        data.draw(st.integers(1, 15)),
    )
    f = UniPoly(F, coeffs)
    s = data.draw(st.integers(1, min(6, f.degree + 1)))
    alphas = data.draw(
        st.lists(st.integers(0, 15), min_size=s, max_size=s, unique=True)
    )
    reduced, consts = divided_difference_reduce(f, alphas, s)
    assert newton_reconstruct(reduced, alphas, consts).coeffs == f.coeffs


def test_bipoly_eval_and_slices():
    F = field_new(4)
    # Q(x, y) = 3 + 2 x^2 + y x + 5 y^2
    Q = BiPoly(F, weight=2, terms={(0, 0): 3, (2, 0): 2, (1, 1): 1, (0, 2): 5})
    assert Q.weighted_degree == 4
    assert Q.y_degree == 2
    for x in range(16):
        for y in range(16):
            want = 3 ^ F.mul(2, F.mul(x, x)) ^ F.mul(y, x) ^ F.mul(5, F.mul(y, y))
            assert Q.eval(x, y) == want
    assert Q.y_slice(0).coeffs == (3, 0, 2)
    assert Q.y_slice(1).coeffs == (0, 1)
    assert Q.y_slice(2).coeffs == (5,)


def test_bipoly_eval_at_poly_matches_substitution():
    F = field_new(4)
    rng = np.random.default_rng(8)
    for _ in range(20):
        terms = {}
        for _ in range(6):
            i, j = int(rng.integers(0, 4)), int(rng.integers(0, 3))
            terms[(i, j)] = int(rng.integers(0, 16))
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            continue
        Q = BiPoly(F, weight=1, terms=terms)
        g = rand_poly(F, rng, 3)
        h = Q.eval_at_poly(g)
        for x in range(16):
            assert h(x) == Q.eval(x, g(x))


def test_bipoly_hasse_matches_shifted_expansion():
    # [x^a y^b] Q(x+u, y+v) computed directly must equal hasse_eval(u, v, a, b).
    F = field_new(3)
    rng = np.random.default_rng(9)
    for _ in range(10):
        terms = {}
        for _ in range(5):
            i, j = int(rng.integers(0, 4)), int(rng.integers(0, 3))
            terms[(i, j)] = int(rng.integers(1, 8))
        Q = BiPoly(F, weight=1, terms=terms)
        u, v = int(rng.integers(0, 8)), int(rng.integers(0, 8))
        a, b = int(rng.integers(0, 3)), int(rng.integers(0, 2))
        # expand Q(x+u, y+v) term by term with field-valued binomial sums
        import math
        want = 0
        for (i, j), c in Q.terms.items():
            for ii in range(a, i + 1):
                for jj in range(b, j + 1):
                    if math.comb(i, ii) % 2 and math.comb(j, jj) % 2 and ii == a and jj == b:
                        want ^= F.mul(
                            c, F.mul(F.pow(u, i - ii), F.pow(v, j - jj))
                        )
        assert Q.hasse_eval(a, b, u, v) == want


def test_unipoly_times_x_minus_and_scale():
    F = field_new(4)
    f = UniPoly(F, (1, 2))
    g = f.times_x_minus(3)     # (x - 3) * f, subtraction being xor
    assert g.coeffs == (F.mul(3, 1), F.mul(3, 2) ^ 1, 2)
    assert f.scale(0).is_zero
    assert f.scale(7).coeffs == (F.mul(7, 1), F.mul(7, 2))
