"""Reed-Solomon evaluation codes: encoding, unique decoding, list decoding.

The list decoder is multiplicity-based interpolation (one linear system,
solved by Gaussian elimination over the field) followed by y-root
extraction, then distance filtering.  It returns every codeword within
the requested radius, for any radius below the Johnson bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import ParameterError
from .gf import Felt, Field
from .poly import UniPoly, interpolate

#: Floating-point slack when deciding whether a radius sits on an integer.
RADIUS_TOL = 1e-9


def johnson_radius(n: int, d: int) -> float:
    """List-decoding radius n - sqrt(n(n-d)) of a length-n, distance-d code."""
    if not 0 <= d <= n:
        raise ParameterError(f"need 0 <= d <= n, got d={d}, n={n}")
    return n - math.sqrt(n * (n - d))


def t_of_tau(tau: float) -> int:
    """Largest integer error count strictly below the real radius tau.

    A tau within tolerance of an integer counts as that integer, so the
    strict inequality survives floating-point noise.
    """
    nearest = round(tau)
    if abs(tau - nearest) <= RADIUS_TOL:
        return int(nearest) - 1
    return math.floor(tau)


def hamming_distance(a, b) -> int:
    a = np.asarray(a, dtype=np.uint16)
    b = np.asarray(b, dtype=np.uint16)
    if a.shape != b.shape:
        raise ParameterError("length mismatch")
    return int(np.count_nonzero(a != b))


class RsCode:
    """RS code: evaluations of polynomials of degree < dim on eval_set."""

    __slots__ = ("field", "eval_set", "dim", "_xs")

    def __init__(self, field: Field, eval_set, dim: int):
        pts = [p.value if isinstance(p, Felt) else int(p) for p in eval_set]
        if any(not 0 <= p < field.q for p in pts):
            raise ParameterError("evaluation point outside the field")
        if len(set(pts)) != len(pts):
            raise ParameterError("evaluation points must be distinct")
        if not 1 <= dim <= len(pts):
            raise ParameterError(f"dimension {dim} outside [1, {len(pts)}]")
        self.field = field
        self.eval_set = tuple(pts)
        self.dim = int(dim)
        self._xs = np.asarray(pts, dtype=np.uint16)

    @property
    def n(self) -> int:
        return len(self.eval_set)

    @property
    def d(self) -> int:
        return self.n - self.dim + 1

    def __repr__(self) -> str:
        return f"RsCode[{self.n}, {self.dim}, {self.d}] over GF({self.field.q})"


def rs_encode(code: RsCode, f) -> np.ndarray:
    """Evaluate the message polynomial on the code's point set.

    Accepts a polynomial or a sequence of dim coefficients.
    """
    if not isinstance(f, UniPoly):
        coeffs = [int(v) for v in f]
        if len(coeffs) != code.dim:
            raise ParameterError(
                f"message must have {code.dim} coefficients, got {len(coeffs)}"
            )
        if any(not 0 <= v < code.field.q for v in coeffs):
            raise ParameterError("message coefficients outside the field")
        f = UniPoly(code.field, tuple(coeffs))
    if f.field != code.field:
        raise ParameterError("message polynomial from the wrong field")
    if f.degree >= code.dim:
        raise ParameterError(
            f"message degree {f.degree} too large for dimension {code.dim}"
        )
    return f.eval_many(code._xs)


def _check_word(code: RsCode, w) -> np.ndarray:
    w = np.asarray(w, dtype=np.uint16)
    if w.shape != (code.n,):
        raise ParameterError(f"received word must have length {code.n}")
    if int(w.max(initial=0)) >= code.field.q:
        raise ParameterError("received symbol outside the field")
    return w


def bmd_decode(code: RsCode, w) -> Optional[np.ndarray]:
    """Unique decoding within half the minimum distance.

    Solves the key equation N(x_p) = w_p E(x_p) with deg N < dim + t and
    deg E <= t as one homogeneous system; any nonzero solution yields the
    message as N/E when at most t errors occurred.  Returns the codeword,
    or None when no codeword lies within t.
    """
    w = _check_word(code, w)
    F = code.field
    k, n, t = code.dim, code.n, (code.d - 1) // 2
    if t == 0:
        f = interpolate(F, list(zip(code.eval_set[:k], w[:k].tolist())))
        cw = rs_encode(code, f)
        return cw if np.array_equal(cw, w) else None
    V = kernels.vandermonde(F._log, F._alog2, code._xs, k + t)
    M = np.zeros((n, k + 2 * t + 1), dtype=np.uint16)
    M[:, : k + t] = V
    for j in range(t + 1):
        M[:, k + t + j] = kernels.mul_vec(F._log, F._alog2, V[:, j], w)
    sol = kernels.nullspace_vector(F._log, F._alog2, M)
    if sol is None:
        return None
    N = UniPoly(F, sol[: k + t].tolist())
    E = UniPoly(F, sol[k + t :].tolist())
    if E.is_zero:
        return None
    f, rem = N.divrem(E)
    if not rem.is_zero or f.degree >= k:
        return None
    cw = rs_encode(code, f)
    return cw if hamming_distance(cw, w) <= t else None


@dataclass(frozen=True)
class GsParams:
    s: int            # interpolation multiplicity
    weight: int       # y-weight of the weighted degree, dim - 1
    list_bound: int   # maximal y-degree L of the interpolation polynomial


@dataclass
class Candidate:
    message: UniPoly
    codeword: np.ndarray
    distance: int


@dataclass
class DecodeList:
    candidates: list[Candidate]
    radius: int
    multiplicity: int
    designed_list_size: int

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self):
        return iter(self.candidates)

    def messages(self) -> list[UniPoly]:
        return [c.message for c in self.candidates]

    def contains_codeword(self, cw) -> bool:
        cw = np.asarray(cw, dtype=np.uint16)
        return any(np.array_equal(c.codeword, cw) for c in self.candidates)


def gs_params(n: int, k: int, t: int) -> GsParams:
    """Smallest multiplicity s whose interpolation system is solvable.

    The weighted-degree budget D = s(n-t) - 1 must admit more monomials
    x^i y^j (with i + (k-1) j <= D, j <= L = D // (k-1)) than the
    n s(s+1)/2 derivative constraints.
    """
    if k < 2:
        raise ParameterError("interpolation decoding needs dimension >= 2")
    d = n - k + 1
    tau = johnson_radius(n, d)
    if not 0 <= t <= t_of_tau(tau):
        raise ParameterError(
            f"radius {t} outside [0, {t_of_tau(tau)}] for this code "
            f"(Johnson bound {tau:.4f})"
        )
    for s in range(1, 4097):
        D = s * (n - t) - 1
        L = D // (k - 1)
        n_monos = (L + 1) * (D + 1) - (k - 1) * L * (L + 1) // 2
        if n_monos > n * s * (s + 1) // 2:
            return GsParams(s=s, weight=k - 1, list_bound=L)
    raise AssertionError("no feasible multiplicity below 4096")


def _monomials(D: int, L: int, k: int):
    monos = [
        (i, j)
        for j in range(L + 1)
        for i in range(D - j * (k - 1) + 1)
    ]
    monos.sort(key=lambda ij: (ij[0] + (k - 1) * ij[1], ij[1]))
    mi = np.array([m[0] for m in monos], dtype=np.int64)
    mj = np.array([m[1] for m in monos], dtype=np.int64)
    return mi, mj


def _sorted_unique(cands: list[Candidate], k: int) -> list[Candidate]:
    seen = {}
    for c in cands:
        key = c.message.coeffs
        if key not in seen:
            seen[key] = c
    out = list(seen.values())
    out.sort(
        key=lambda c: (
            c.distance,
            c.message.coeffs + (0,) * (k - len(c.message.coeffs)),
        )
    )
    return out


def _repetition_list(code: RsCode, w: np.ndarray, t: int) -> DecodeList:
    # Dimension 1: codewords are constant vectors; scan values present in w.
    n = code.n
    if t >= n:
        raise ParameterError(f"radius {t} at or beyond the code length")
    cands = []
    for v in sorted(set(int(x) for x in w)):
        dist = int(np.count_nonzero(w != v))
        if dist <= t:
            f = UniPoly.constant(code.field, v)
            cands.append(Candidate(f, rs_encode(code, f), dist))
    return DecodeList(
        candidates=_sorted_unique(cands, 1),
        radius=t,
        multiplicity=1,
        designed_list_size=max(n // (n - t), 1),
    )


def gs_list_decode(code: RsCode, w, t: int) -> DecodeList:
    """Every codeword within Hamming distance t of w, with its message.

    Interpolate one bivariate polynomial forced to vanish with
    multiplicity s at all n received points, extract its y-roots, keep
    the ones whose codeword lies within t.
    """
    w = _check_word(code, w)
    t = int(t)
    if t < 0:
        raise ParameterError("radius must be nonnegative")
    F = code.field
    k, n = code.dim, code.n
    if k == 1:
        return _repetition_list(code, w, t)
    if t == 0:
        f = interpolate(F, list(zip(code.eval_set[:k], w[:k].tolist())))
        cw = rs_encode(code, f)
        cands = []
        if np.array_equal(cw, w):
            cands.append(Candidate(f, cw, 0))
        return DecodeList(cands, 0, 1, 1)
    params = gs_params(n, k, t)
    s, L = params.s, params.list_bound
    D = s * (n - t) - 1
    mi, mj = _monomials(D, L, k)
    M = kernels.gs_matrix(F._log, F._alog2, code._xs, w, s, mi, mj)
    sol = kernels.nullspace_vector(F._log, F._alog2, M)
    if sol is None:
        raise AssertionError("interpolation system unexpectedly full-rank")
    nz = np.flatnonzero(sol)
    qdense = np.zeros((int(mj[nz].max()) + 1, int(mi[nz].max()) + 1), dtype=np.uint16)
    qdense[mj[nz], mi[nz]] = sol[nz]
    cands = []
    for coeffs in kernels.rr_roots(F._log, F._alog2, qdense, k):
        f = UniPoly(F, coeffs.tolist())
        cw = rs_encode(code, f)
        dist = hamming_distance(cw, w)
        if dist <= t:
            cands.append(Candidate(f, cw, dist))
    cands = _sorted_unique(cands, k)
    assert len(cands) <= L, "list larger than its designed bound"
    return DecodeList(cands, t, s, L)
