"""Optimal locally repairable codes on multiplicative subgroup cosets.

The evaluation set is a union of n/n_l cosets of the order-n_l subgroup
of GF(q)*, so g(x) = x^(n_l) is constant on each repair set.  Codewords
are evaluations of polynomials whose monomial support is restricted to
degrees i with i mod n_l < r, up to degree K-1; the containing RS(n, K)
code is the supercode.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .gf import Felt, Field, field_for_order
from .poly import UniPoly
from .rs import RsCode


@dataclass(frozen=True)
class LrcParams:
    """Parameter arithmetic for an (r, rho)-local code of length n.

    The distance is the optimal value d = n - k + 1 - (ceil(k/r) - 1)(rho - 1).
    k need not be a multiple of r: the last local message row is then
    partial, with the ceiling forms used throughout.
    """

    q: int
    n: int
    k: int
    r: int
    rho: int

    def __post_init__(self):
        m = self.q.bit_length() - 1
        if self.q != 1 << m or not 2 <= m <= 16:
            raise ParameterError(
                f"q must be a power of two in [4, 65536], got {self.q}"
            )
        if self.rho < 2:
            raise ParameterError(f"rho must be >= 2, got {self.rho}")
        if self.r < 1:
            raise ParameterError(f"r must be >= 1, got {self.r}")
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        if self.n % self.n_l != 0:
            raise ParameterError(
                f"repair-set size n_l = {self.n_l} does not divide n = {self.n}"
            )
        if self.n > self.q - 1:
            raise ParameterError(
                f"length {self.n} exceeds q - 1 = {self.q - 1}"
            )
        if self.k > self.r * self.groups:
            raise ParameterError(
                f"k = {self.k} exceeds the information capacity "
                f"r * n/n_l = {self.r * self.groups}"
            )

    @property
    def n_l(self) -> int:
        return self.r + self.rho - 1

    @property
    def groups(self) -> int:
        return self.n // self.n_l

    @property
    def info_rows(self) -> int:
        return -(-self.k // self.r)  # ceil(k / r)

    @property
    def super_dim(self) -> int:
        """Dimension K of the containing RS supercode."""
        return self.k + (self.info_rows - 1) * (self.rho - 1)

    @property
    def d(self) -> int:
        return self.n - self.super_dim + 1

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "k": self.k, "r": self.r, "rho": self.rho}

    @classmethod
    def from_dict(cls, obj: dict) -> LrcParams:
        try:
            return cls(
                q=int(obj["q"]),
                n=int(obj["n"]),
                k=int(obj["k"]),
                r=int(obj["r"]),
                rho=int(obj["rho"]),
            )
        except KeyError as missing:
            raise ParameterError(f"code descriptor missing field {missing}")


class TamoBargCode:
    """A constructed LRC: evaluation points grouped by repair set."""

    __slots__ = ("params", "field", "eval_set", "partition", "coset_labels", "_xs")

    def __init__(self, params: LrcParams, field: Field | None = None):
        F = field if field is not None else field_for_order(params.q)
        n, n_l, G = params.n, params.n_l, params.groups
        if (F.q - 1) % n_l != 0:
            raise ParameterError(
                f"coset construction needs n_l | q-1; {n_l} does not divide {F.q - 1}"
            )
        if (F.q - 1) % n != 0:
            raise ParameterError(
                f"coset construction needs n | q-1; {n} does not divide {F.q - 1}"
            )
        gen = F.generator
        h = F.pow(gen, (F.q - 1) // n_l)
        subgroup = [F.pow(h, j) for j in range(n_l)]
        pts: list[int] = []
        for i in range(G):
            lead = F.pow(gen, i)
            pts.extend(F.mul(lead, s) for s in subgroup)
        assert len(set(pts)) == n, "cosets not disjoint"
        labels = [F.pow(pts[i * n_l], n_l) for i in range(G)]
        assert len(set(labels)) == G, "coset labels collide"
        for i in range(G):
            for p in pts[i * n_l : (i + 1) * n_l]:
                assert F.pow(p, n_l) == labels[i]
        self.params = params
        self.field = F
        self.eval_set = tuple(pts)
        self.partition = tuple(range(i * n_l, (i + 1) * n_l) for i in range(G))
        self.coset_labels = tuple(labels)
        self._xs = np.asarray(pts, dtype=np.uint16)
        assert len(self.admissible_degrees()) == params.k

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    def admissible_degrees(self) -> list[int]:
        """Monomial degrees a codeword polynomial may use."""
        K, n_l, r = self.params.super_dim, self.params.n_l, self.params.r
        return [i for i in range(K) if i % n_l < r]

    def message_to_poly(self, u) -> UniPoly:
        """Message entry (a, b) = u[b*r + a] becomes the x^(b*n_l + a) coefficient."""
        k, r, n_l = self.params.k, self.params.r, self.params.n_l
        vals = [v.value if isinstance(v, Felt) else int(v) for v in u]
        if len(vals) != k:
            raise ParameterError(f"message must have length {k}, got {len(vals)}")
        coeffs = [0] * self.params.super_dim
        for idx, v in enumerate(vals):
            b, a = divmod(idx, r)
            coeffs[b * n_l + a] = v
        return UniPoly(self.field, coeffs)

    def poly_to_message(self, f: UniPoly) -> list[int]:
        if not self.is_member(f):
            raise ParameterError("polynomial is not in the code's support span")
        r, n_l = self.params.r, self.params.n_l
        out = [0] * self.params.k
        for deg, c in enumerate(f.coeffs):
            if c:
                b, a = divmod(deg, n_l)
                out[b * r + a] = c
        return out

    def encode(self, u) -> np.ndarray:
        return self.message_to_poly(u).eval_many(self._xs)

    def is_member(self, f: UniPoly) -> bool:
        if f.field != self.field:
            return False
        K, n_l, r = self.params.super_dim, self.params.n_l, self.params.r
        if f.degree >= K:
            return False
        return all(
            c == 0 or deg % n_l < r for deg, c in enumerate(f.coeffs)
        )

    def supercode(self) -> RsCode:
        return RsCode(self.field, self.eval_set, self.params.super_dim)

    def local_code_view(self, j: int) -> RsCode:
        if not 0 <= j < self.params.groups:
            raise ParameterError(
                f"repair-set index {j} outside [0, {self.params.groups})"
            )
        pts = [self.eval_set[i] for i in self.partition[j]]
        return RsCode(self.field, pts, self.params.r)

    def __repr__(self) -> str:
        p = self.params
        return f"TamoBargCode[{p.n}, {p.k}, r={p.r}, rho={p.rho}] over GF({p.q})"


def tb_construct(q: int, n: int, r: int, rho: int, k: int | None = None) -> TamoBargCode:
    """Build the coset-based LRC; k defaults to r*(n/n_l - 1).

    The default keeps one full repair set's worth of global redundancy,
    which is the parameter pattern of all the small worked codes here.
    """
    n_l = r + rho - 1
    if n_l <= 0 or n % n_l != 0:
        raise ParameterError(
            f"repair-set size n_l = {n_l} does not divide n = {n}"
        )
    if k is None:
        k = r * (n // n_l - 1)
    return TamoBargCode(LrcParams(q=q, n=n, k=k, r=r, rho=rho))


def tb_encode(code: TamoBargCode, u) -> np.ndarray:
    return code.encode(u)


def supercode(code: TamoBargCode) -> RsCode:
    return code.supercode()


def is_lrc_member(code: TamoBargCode, f: UniPoly) -> bool:
    return code.is_member(f)


def local_code_view(code: TamoBargCode, j: int) -> RsCode:
    return code.local_code_view(j)
