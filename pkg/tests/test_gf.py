import numpy as np
import pytest

from lrcdec.errors import ParameterError
from lrcdec.gf import STANDARD_MODULI, Felt, field_for_order, field_new


def slow_mul(a: int, b: int, modulus: int, m: int) -> int:
    """Bitwise carryless multiply-and-reduce, independent of the tables."""
    acc = 0
    for i in range(m):
        if (b >> i) & 1:
            acc ^= a << i
    for i in range(2 * m - 2, m - 1, -1):
        if (acc >> i) & 1:
            acc ^= modulus << (i - m)
    return acc


def test_mul_matches_bitwise_oracle_exhaustive_gf16():
    F = field_new(4)
    for a in range(16):
        for b in range(16):
            assert F.mul(a, b) == slow_mul(a, b, F.modulus, 4)


def test_mul_matches_bitwise_oracle_sampled_gf1024():
    F = field_new(10)
    rng = np.random.default_rng(0)
    for _ in range(2000):
        a, b = int(rng.integers(0, 1024)), int(rng.integers(0, 1024))
        assert F.mul(a, b) == slow_mul(a, b, F.modulus, 10)


def test_field_axioms_exhaustive_gf8():
    F = field_new(3)
    els = range(8)
    for a in els:
        assert F.add(a, 0) == a
        assert F.mul(a, 1) == a
        assert F.add(a, a) == 0
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            for c in els:
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
                assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)


def test_field_axioms_sampled_gf256():
    F = field_new(8)
    rng = np.random.default_rng(1)
    for _ in range(500):
        a, b, c = (int(x) for x in rng.integers(0, 256, 3))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 8, 10])
def test_inverse_exhaustive(m):
    F = field_new(m)
    for a in range(1, F.q):
        assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_pow_matches_repeated_mul():
    F = field_new(5)
    rng = np.random.default_rng(2)
    for _ in range(100):
        a = int(rng.integers(1, 32))
        e = int(rng.integers(-40, 40))
        acc = 1
        for _ in range(e % (F.q - 1)):
            acc = F.mul(acc, a)
        assert F.pow(a, e) == acc
    assert F.pow(0, 0) == 1
    assert F.pow(0, 3) == 0


def test_generator_spans_nonzero_elements():
    for m in (2, 3, 4, 6):
        F = field_new(m)
        seen = set()
        x = 1
        for _ in range(F.q - 1):
            seen.add(x)
            x = F.mul(x, F.generator)
        assert x == 1
        assert seen == set(range(1, F.q))


def test_antilog_table_supports_product_and_quotient_exponents():
    # Largest exponent from a product is 2(q-2); from a quotient,
    # log a + (q-1 - log b) can reach 2q-3.  The table must cover both,
    # repeating with period q-1.
    F = field_new(4)
    q = F.q
    assert len(F._alog2) == 2 * (q - 1)
    for i in range(q - 1):
        assert F._alog2[i] == F._alog2[i + q - 1]
    for a in range(1, q):
        for b in range(1, q):
            idx = int(F._log[a]) + (q - 1) - int(F._log[b])
            assert F.mul(a, F.inv(b)) == int(F._alog2[idx])


def test_standard_moduli_build_all_supported_degrees():
    assert set(STANDARD_MODULI) == set(range(2, 17))
    for m in range(2, 17):
        F = field_new(m)
        assert F.q == 1 << m
        rng = np.random.default_rng(m)
        for _ in range(20):
            a = int(rng.integers(1, F.q))
            assert F.mul(a, F.inv(a)) == 1


def test_reducible_modulus_rejected():
    # x^4 + x^2 + 1 = (x^2 + x + 1)^2
    with pytest.raises(ParameterError):
        field_new(4, modulus=0b10101)


def test_out_of_range_degree_rejected():
    with pytest.raises(ParameterError):
        field_new(1)
    with pytest.raises(ParameterError):
        field_new(17)


def test_field_cache_returns_same_object():
    assert field_new(8) is field_new(8)
    assert field_for_order(256) is field_new(8)
    with pytest.raises(ParameterError):
        field_for_order(100)


def test_felt_operators_and_cross_field_mixing():
    F, G = field_new(3), field_new(4)
    a, b = F.felt(3), F.felt(5)
    assert int(a + b) == 3 ^ 5
    assert int(a * b) == F.mul(3, 5)
    assert int(a / b) == F.div(3, 5)
    assert int(a**3) == F.pow(3, 3)
    assert int(a.inverse() * a) == 1
    with pytest.raises(ParameterError):
        _ = a + G.felt(1)
    with pytest.raises(ParameterError):
        _ = a * G.felt(2)


def test_felt_value_range_checked():
    F = field_new(3)
    with pytest.raises(ParameterError):
        F.felt(8)
    with pytest.raises(ParameterError):
        F.felt(-1)


def test_elements_iteration():
    F = field_new(3)
    assert [int(x) for x in F.elements()] == list(range(8))
    assert [int(x) for x in F.nonzero_elements()] == list(range(1, 8))
    assert int(F.zero()) == 0 and int(F.one()) == 1
