from __future__ import annotations

import numpy as np
import pytest

from lrcdec.gf import field_new
from lrcdec.listdec import global_radius
from lrcdec.lrc import tb_construct


@pytest.fixture(scope="session")
def f8():
    return field_new(3)


@pytest.fixture(scope="session")
def f16():
    return field_new(4)


@pytest.fixture(scope="session")
def f64():
    return field_new(6)


@pytest.fixture(scope="session")
def code15():
    """[15, 6] code over GF(16): three repair sets of five, rho = 3."""
    return tb_construct(16, 15, 3, 3, k=6)


@pytest.fixture(scope="session")
def code63():
    """[63, 16] code over GF(64): three repair sets of 21, rho = 14."""
    return tb_construct(64, 63, 8, 14, k=16)


@pytest.fixture(scope="session")
def report15(code15):
    return global_radius(code15.params)


@pytest.fixture(scope="session")
def report63(code63):
    return global_radius(code63.params)


def random_error(rng, n: int, q: int, weight: int) -> np.ndarray:
    """Error vector with exactly `weight` nonzero positions."""
    e = np.zeros(n, dtype=np.uint16)
    pos = rng.choice(n, weight, replace=False)
    e[pos] = rng.integers(1, q, weight)
    return e
