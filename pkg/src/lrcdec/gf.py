"""Arithmetic in binary extension fields GF(2^m), 2 <= m <= 16.

Elements are integers in [0, q) whose bits are the coordinates of the
element over GF(2); addition is XOR, multiplication runs through
discrete-log tables built at construction time over a primitive element.
One fixed modulus per degree keeps serialized words reproducible across
builds.
"""

from __future__ import annotations

import numpy as np

from .errors import ParameterError

# Standard primitive polynomial for each supported degree, encoded as the
# (m+1)-bit mask of the polynomial's coefficients.  x is a primitive root
# for every entry.
STANDARD_MODULI = {
    2: 0x7,        # x^2 + x + 1
    3: 0xB,        # x^3 + x + 1
    4: 0x13,       # x^4 + x + 1
    5: 0x25,       # x^5 + x^2 + 1
    6: 0x43,       # x^6 + x + 1
    7: 0x89,       # x^7 + x^3 + 1
    8: 0x11D,      # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,      # x^9 + x^4 + 1
    10: 0x409,     # x^10 + x^3 + 1
    11: 0x805,     # x^11 + x^2 + 1
    12: 0x1053,    # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,    # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,    # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,    # x^15 + x + 1
    16: 0x1100B,   # x^16 + x^12 + x^3 + x + 1
}


def _clmul_mod(a: int, b: int, modulus: int, m: int) -> int:
    """Carry-less multiply of a and b reduced by modulus; table-free."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= modulus
    return acc


def _polydivmod2(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of bit-mask polynomials over GF(2)."""
    db = b.bit_length() - 1
    quo = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        quo ^= 1 << shift
        a ^= b << shift
    return quo, a


def is_irreducible(modulus: int, m: int) -> bool:
    """Trial division by every polynomial of degree 1 .. m//2."""
    if modulus.bit_length() - 1 != m:
        return False
    for deg in range(1, m // 2 + 1):
        for low in range(1 << deg):
            cand = (1 << deg) | low
            if _polydivmod2(modulus, cand)[1] == 0:
                return False
    return True


class Field:
    """Immutable GF(2^m); construct via field_new()."""

    __slots__ = ("p", "m", "q", "modulus", "generator", "_log", "_alog2")

    def __init__(self, m: int, modulus: int | None = None):
        if not isinstance(m, int) or not 2 <= m <= 16:
            raise ParameterError(f"extension degree must be in [2, 16], got {m!r}")
        if modulus is None:
            modulus = STANDARD_MODULI[m]
        if not is_irreducible(modulus, m):
            raise ParameterError(
                f"modulus {modulus:#x} is not an irreducible degree-{m} polynomial"
            )
        self.p = 2
        self.m = m
        self.q = 1 << m
        self.modulus = modulus
        self.generator = self._find_generator()
        self._build_tables()

    def _find_generator(self) -> int:
        q = self.q
        for g in range(2, q):
            order = 1
            x = g
            while x != 1:
                x = _clmul_mod(x, g, self.modulus, self.m)
                order += 1
                if order > q - 1:
                    break
            if order == q - 1:
                return g
        raise AssertionError("no generator found; modulus not irreducible?")

    def _build_tables(self) -> None:
        q = self.q
        log = np.zeros(q, dtype=np.uint16)
        alog = np.zeros(q - 1, dtype=np.uint16)
        x = 1
        for i in range(q - 1):
            alog[i] = x
            log[x] = i
            x = _clmul_mod(x, self.generator, self.modulus, self.m)
        assert x == 1, "generator order mismatch"
        self._log = log
        # Doubled antilog table so mul can index log[a]+log[b] directly.
        # One extra entry covers log[a] + (q-1 - log[b]), the largest
        # exponent produced when a division folds in an inverse.
        self._alog2 = np.concatenate([alog, alog[: q - 1]]).astype(np.uint16)

    @property
    def log_table(self) -> np.ndarray:
        return self._log

    @property
    def antilog_table(self) -> np.ndarray:
        return self._alog2[: self.q - 1]

    # -- scalar arithmetic on raw int values ------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._alog2[int(self._log[a]) + int(self._log[b])])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        return int(self._alog2[(self.q - 1) - int(self._log[a])])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of 0 in a finite field")
            return 0 if e else 1
        la = int(self._log[a])
        return int(self._alog2[(la * e) % (self.q - 1)])

    # -- element factory and iteration ------------------------------------

    def felt(self, value: int) -> Felt:
        if not 0 <= value < self.q:
            raise ParameterError(f"value {value} outside [0, {self.q})")
        return Felt(int(value), self)

    def zero(self) -> Felt:
        return Felt(0, self)

    def one(self) -> Felt:
        return Felt(1, self)

    def elements(self):
        return (Felt(v, self) for v in range(self.q))

    def nonzero_elements(self):
        return (Felt(v, self) for v in range(1, self.q))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def __repr__(self) -> str:
        return f"Field(2^{self.m}, modulus={self.modulus:#x})"


class Felt:
    """One field element; supports +, -, *, /, ** and unwraps via .value."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: Field):
        self.value = value
        self.field = field

    def _check(self, other: Felt) -> None:
        if not isinstance(other, Felt):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if self.field != other.field:
            raise ParameterError("elements of different fields never mix")

    def __add__(self, other: Felt) -> Felt:
        self._check(other)
        return Felt(self.value ^ other.value, self.field)

    __sub__ = __add__

    def __mul__(self, other: Felt) -> Felt:
        self._check(other)
        return Felt(self.field.mul(self.value, other.value), self.field)

    def __truediv__(self, other: Felt) -> Felt:
        self._check(other)
        return Felt(self.field.div(self.value, other.value), self.field)

    def __pow__(self, e: int) -> Felt:
        return Felt(self.field.pow(self.value, e), self.field)

    def inverse(self) -> Felt:
        return Felt(self.field.inv(self.value), self.field)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Felt)
            and self.value == other.value
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.value, self.field.m, self.field.modulus))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    __index__ = __int__

    def __repr__(self) -> str:
        return f"Felt({self.value}, GF(2^{self.field.m}))"


_FIELD_CACHE: dict[tuple[int, int], Field] = {}


def field_new(m: int, modulus: int | None = None) -> Field:
    """Return GF(2^m) with the standard modulus (or a caller-supplied one).

    Instances are cached per (m, modulus): tables are built once.
    """
    key = (m, modulus if modulus is not None else STANDARD_MODULI.get(m, -1))
    cached = _FIELD_CACHE.get(key)
    if cached is None:
        cached = _FIELD_CACHE.setdefault(key, Field(m, modulus))
    return cached


def field_for_order(q: int) -> Field:
    """Return GF(q) for q a power of two in [4, 65536]."""
    m = q.bit_length() - 1
    if q != 1 << m:
        raise ParameterError(f"field order must be a power of 2, got {q}")
    return field_new(m)


def add(a: Felt, b: Felt) -> Felt:
    return a + b


def mul(a: Felt, b: Felt) -> Felt:
    return a * b


def inv(a: Felt) -> Felt:
    return a.inverse()


def pow_(a: Felt, e: int) -> Felt:
    return a ** e
