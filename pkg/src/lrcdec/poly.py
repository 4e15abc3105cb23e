"""Polynomials over GF(2^m): dense univariate, sparse bivariate.

Coefficients are stored as raw integer element values; Felt wrappers are
accepted at construction and unwrapped.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError
from .gf import Felt, Field
from . import kernels


def _unwrap(c) -> int:
    return c.value if isinstance(c, Felt) else int(c)


class UniPoly:
    """Dense univariate polynomial; coeffs[i] is the degree-i coefficient."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        vals = [_unwrap(c) for c in coeffs]
        for v in vals:
            if not 0 <= v < field.q:
                raise ParameterError(f"coefficient {v} outside GF({field.q})")
        while vals and vals[-1] == 0:
            vals.pop()
        self.field = field
        self.coeffs = tuple(vals)

    @classmethod
    def zero(cls, field: Field) -> UniPoly:
        return cls(field, ())

    @classmethod
    def constant(cls, field: Field, c) -> UniPoly:
        return cls(field, (c,))

    @classmethod
    def x(cls, field: Field) -> UniPoly:
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UniPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.field.m, self.field.modulus))

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"

    def _check(self, other: UniPoly) -> None:
        if not isinstance(other, UniPoly):
            raise TypeError(f"expected UniPoly, got {type(other).__name__}")
        if self.field != other.field:
            raise ParameterError("polynomials over different fields never mix")

    def __add__(self, other: UniPoly) -> UniPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return UniPoly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: UniPoly) -> UniPoly:
        self._check(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero(self.field)
        F = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] ^= F.mul(a, b)
        return UniPoly(F, out)

    def scale(self, c) -> UniPoly:
        c = _unwrap(c)
        F = self.field
        return UniPoly(F, [F.mul(a, c) for a in self.coeffs])

    def divrem(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(F), self
        quo = [0] * (dq + 1)
        lead_inv = F.inv(other.coeffs[-1])
        for sh in range(dq, -1, -1):
            top = rem[sh + other.degree]
            if top == 0:
                continue
            factor = F.mul(top, lead_inv)
            quo[sh] = factor
            for i, c in enumerate(other.coeffs):
                if c:
                    rem[sh + i] ^= F.mul(factor, c)
        return UniPoly(F, quo), UniPoly(F, rem)

    def __call__(self, x):
        if isinstance(x, Felt):
            return Felt(self._eval_int(x.value), self.field)
        return self._eval_int(int(x))

    def _eval_int(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.mul(acc, x) ^ c
        return acc

    def eval_many(self, xs) -> np.ndarray:
        """Evaluate at an array of points via the kernel backend."""
        F = self.field
        cf = np.asarray(self.coeffs if self.coeffs else (0,), dtype=np.uint16)
        xs = np.asarray(xs, dtype=np.uint16)
        return kernels.eval_poly_many(F._log, F._alog2, cf, xs)

    def times_x_minus(self, a) -> UniPoly:
        """Multiply by the monic linear factor (x - a)."""
        a = _unwrap(a)
        F = self.field
        out = [0] + list(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i] ^= F.mul(c, a)
        return UniPoly(F, out)


def eval_(f: UniPoly, x):
    return f(x)


def interpolate(field: Field, points) -> UniPoly:
    """Unique polynomial of degree < len(points) through the given points.

    Newton's divided differences; cost O(n^2).
    """
    xs = [_unwrap(p[0]) for p in points]
    ys = [_unwrap(p[1]) for p in points]
    if len(set(xs)) != len(xs):
        raise ParameterError("interpolation nodes must be distinct")
    if not xs:
        return UniPoly.zero(field)
    F = field
    n = len(xs)
    vals = list(ys)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            num = vals[i] ^ vals[i - 1]
            den = xs[i] ^ xs[i - level]
            vals[i] = F.mul(num, F.inv(den))
    f = UniPoly.constant(F, vals[n - 1])
    for j in range(n - 2, -1, -1):
        f = f.times_x_minus(xs[j])
        f = f + UniPoly.constant(F, vals[j])
    return f


def divided_difference_reduce(f: UniPoly, alphas, s: int) -> tuple[UniPoly, list[int]]:
    """Apply s steps of (f(x) - f(a)) / (x - a) at successive points.

    Returns the s-times-reduced polynomial together with the constants
    c_j peeled off at each step, which invert the map via the Newton form
    (see newton_reconstruct).  Each step drops the degree by exactly one
    while the degree stays nonnegative.
    """
    alphas = [_unwrap(a) for a in alphas]
    if len(set(alphas)) != len(alphas):
        raise ParameterError("reduction points must be distinct")
    if s > len(alphas):
        raise ParameterError(f"need {s} reduction points, got {len(alphas)}")
    if s > f.degree + 1:
        raise ParameterError(
            f"cannot reduce degree-{f.degree} polynomial {s} times"
        )
    F = f.field
    cur = list(f.coeffs)
    constants = []
    for step in range(s):
        a = alphas[step]
        # Synthetic division: cur = (cur - cur(a)) / (x - a), remainder
        # cur(a) is the peeled constant.
        acc = 0
        quo = [0] * max(len(cur) - 1, 0)
        for i in range(len(cur) - 1, -1, -1):
            acc = F.mul(acc, a) ^ cur[i]
            if i > 0:
                quo[i - 1] = acc
        constants.append(acc)
        cur = quo
    return UniPoly(F, cur), constants


def newton_reconstruct(reduced: UniPoly, alphas, constants) -> UniPoly:
    """Invert divided_difference_reduce: f = (...(g*(x-a_{s-1})+c_{s-1})...)."""
    alphas = [_unwrap(a) for a in alphas]
    constants = [_unwrap(c) for c in constants]
    if len(constants) > len(alphas):
        raise ParameterError("more constants than reduction points")
    f = reduced
    F = reduced.field
    for j in range(len(constants) - 1, -1, -1):
        f = f.times_x_minus(alphas[j])
        f = f + UniPoly.constant(F, constants[j])
    return f


class BiPoly:
    """Sparse bivariate polynomial with a (1, weight)-weighted degree."""

    __slots__ = ("field", "weight", "terms")

    def __init__(self, field: Field, weight: int, terms: dict | None = None):
        self.field = field
        self.weight = int(weight)
        self.terms = {}
        for (i, j), c in (terms or {}).items():
            c = _unwrap(c)
            if c:
                self.terms[(int(i), int(j))] = c

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def weighted_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + self.weight * j for i, j in self.terms)

    @property
    def y_degree(self) -> int:
        if not self.terms:
            return -1
        return max(j for _, j in self.terms)

    @property
    def x_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i for i, _ in self.terms)

    def eval(self, x, y) -> int:
        x, y = _unwrap(x), _unwrap(y)
        F = self.field
        acc = 0
        for (i, j), c in self.terms.items():
            acc ^= F.mul(c, F.mul(F.pow(x, i), F.pow(y, j)))
        return acc

    def hasse_eval(self, a: int, b: int, x, y) -> int:
        """Hasse (mixed partial) derivative of order (a, b), evaluated.

        Binomial factors are taken mod 2: C(i,a) is odd exactly when a's
        bits are a subset of i's bits.
        """
        x, y = _unwrap(x), _unwrap(y)
        F = self.field
        acc = 0
        for (i, j), c in self.terms.items():
            if (i & a) != a or (j & b) != b:
                continue
            e1, e2 = i - a, j - b
            if (x == 0 and e1) or (y == 0 and e2):
                continue
            acc ^= F.mul(c, F.mul(F.pow(x, e1), F.pow(y, e2)))
        return acc

    def y_slice(self, j: int) -> UniPoly:
        """Coefficient of y^j as a univariate polynomial in x."""
        top = -1
        for (i, jj) in self.terms:
            if jj == j and i > top:
                top = i
        out = [0] * (top + 1)
        for (i, jj), c in self.terms.items():
            if jj == j:
                out[i] = c
        return UniPoly(self.field, out)

    def to_dense(self) -> np.ndarray:
        """uint16 array indexed [y-degree, x-degree]."""
        ly = max(self.y_degree, 0)
        lx = max(self.x_degree, 0)
        out = np.zeros((ly + 1, lx + 1), dtype=np.uint16)
        for (i, j), c in self.terms.items():
            out[j, i] = c
        return out

    def eval_at_poly(self, f: UniPoly) -> UniPoly:
        """Substitute y = f(x); zero result certifies a y-root."""
        F = self.field
        powers = [UniPoly.constant(F, 1)]
        for _ in range(self.y_degree):
            powers.append(powers[-1] * f)
        acc = UniPoly.zero(F)
        for j in range(self.y_degree + 1):
            slice_j = self.y_slice(j)
            if not slice_j.is_zero:
                acc = acc + slice_j * powers[j]
        return acc

    def __repr__(self) -> str:
        return f"BiPoly(weight={self.weight}, terms={len(self.terms)})"
