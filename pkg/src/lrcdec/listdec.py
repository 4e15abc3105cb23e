"""List decoding of LRCs beyond the Johnson radius.

The radius engine scales the local Johnson radius by d/rho whenever that
guarantees at least one locally decodable repair set, then sharpens the
result by re-counting decodable sets with integer floors and re-deriving
the radius of the correspondingly shortened code, iterated to a fixed
point.  The decoder realizes the guarantee: list-decode each repair set
locally, then for each combination of locally decoded sets, shorten the
supercode instance by those positions and list-decode the remainder.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ParameterError
from .gf import Felt
from .lrc import LrcParams, TamoBargCode
from .poly import UniPoly, newton_reconstruct
from .rs import (
    RADIUS_TOL,
    Candidate,
    DecodeList,
    RsCode,
    gs_list_decode,
    gs_params,
    hamming_distance,
    johnson_radius,
    t_of_tau,
)


def _floor_tol(x: float) -> int:
    """Floor, except values within tolerance of an integer floor to it."""
    nearest = round(x)
    if abs(x - nearest) <= RADIUS_TOL:
        return int(nearest)
    return math.floor(x)


def sigma_bound(n: int, n_l: int, tau_g: float, tau_l: float) -> float:
    """Real-valued lower bound on repair sets with at most tau_l errors."""
    if tau_l <= 0:
        raise ParameterError("local radius must be positive")
    return max(0.0, n / n_l - tau_g / tau_l)


@dataclass
class RadiusReport:
    """Decoding radii of one parameter set, base and floor-refined."""

    params: LrcParams
    beta: float
    tau_johnson: float
    t_johnson: int
    tau_local: float
    t_local: int
    tau_global: float       # base radius: (d/rho) * tau_local, or Johnson
    t_global: int
    sigma_real: float       # real-valued decodable-set bound at tau_global
    sigma: int              # integer decodable-set count at t_global
    refined: bool
    # Shortened-code radius at sigma_refined, and the largest integer
    # radius consistent with its own decodable-set count.  t_refined can
    # sit more than 1 below tau_refined when the count drops at the next
    # integer; t_refined is the operational guarantee either way.
    tau_refined: float
    t_refined: int
    sigma_refined: int
    list_bound: int

    @property
    def decoding_radius(self) -> int:
        """Largest guaranteed integer radius; what list_decode defaults to."""
        return self.t_refined if self.refined else self.t_global

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "beta": self.beta,
            "tau_johnson": self.tau_johnson,
            "t_johnson": self.t_johnson,
            "tau_local": self.tau_local,
            "t_local": self.t_local,
            "tau_global": self.tau_global,
            "t_global": self.t_global,
            "sigma_real": self.sigma_real,
            "sigma": self.sigma,
            "refined": self.refined,
            "tau_refined": self.tau_refined,
            "t_refined": self.t_refined,
            "sigma_refined": self.sigma_refined,
            "decoding_radius": self.decoding_radius,
            "list_bound": self.list_bound,
        }


def _sigma_at(params: LrcParams, t: int, t_l: int) -> int:
    """Integer decodable-set guarantee at integer radius t, uncapped."""
    return params.groups - t // (t_l + 1)


def _shorten_cap(params: LrcParams) -> int:
    """Most repair sets the decoder can shorten by while keeping dim >= 1."""
    return min(params.groups, (params.super_dim - 1) // params.n_l)


def global_radius(params: LrcParams) -> RadiusReport:
    """Radius engine: base radius, then the floor-refined fixed point."""
    n, n_l, G, d, rho = params.n, params.n_l, params.groups, params.d, params.rho
    tau_l = johnson_radius(n_l, rho)
    t_l = t_of_tau(tau_l)
    tau_J = johnson_radius(n, d)
    t_J = t_of_tau(tau_J)
    beta = n * rho / (n_l * d)
    scaled = (d / rho) * tau_l
    if sigma_bound(n, n_l, scaled, tau_l) > 0:
        tau_g = scaled
        sigma_real = sigma_bound(n, n_l, scaled, tau_l)
    else:
        tau_g = tau_J
        sigma_real = sigma_bound(n, n_l, tau_J, tau_l)
    t_g = t_of_tau(tau_g)
    sigma = max(0, G - t_g // (t_l + 1))
    cap = _shorten_cap(params)

    def radius_for(sp: int) -> float:
        sp_eff = max(0, min(sp, cap))
        if sp_eff == 0:
            return tau_J
        return johnson_radius(n - sp_eff * n_l, d)

    # Fixed point on sigma' = G - floor(tau)/(t_l+1); on a cycle, fall
    # back to scanning for the largest integer radius consistent with
    # its own floor count.
    tau_cur = tau_g
    seen: list[int] = []
    stable_sp = None
    for _ in range(64):
        sp = G - _floor_tol(tau_cur) // (t_l + 1)
        tau_next = radius_for(sp)
        if G - _floor_tol(tau_next) // (t_l + 1) == sp:
            stable_sp = sp
            tau_cur = tau_next
            break
        if sp in seen:
            break
        seen.append(sp)
        tau_cur = tau_next
    if stable_sp is not None:
        sigma_ref = max(0, min(stable_sp, cap))
        tau_ref = tau_cur
        t_ref = t_of_tau(tau_ref)
    else:
        # Largest integer radius consistent with its own decodable-set
        # count; consistency is not monotone in t, so scan the range.
        t_ref, sigma_ref, tau_ref = t_g, max(0, min(sigma, cap)), tau_g
        for t in range(t_g + 1, n + 1):
            sp = _sigma_at(params, t, t_l)
            if sp <= 0:
                break
            tau_t = radius_for(sp)
            if t <= t_of_tau(tau_t) and t > t_ref:
                t_ref, sigma_ref, tau_ref = t, max(0, min(sp, cap)), tau_t
    assert tau_ref >= tau_g - RADIUS_TOL, "refinement may never lose radius"
    refined = tau_ref > tau_g + RADIUS_TOL
    report = RadiusReport(
        params=params,
        beta=beta,
        tau_johnson=tau_J,
        t_johnson=t_J,
        tau_local=tau_l,
        t_local=t_l,
        tau_global=tau_g,
        t_global=t_g,
        sigma_real=sigma_real,
        sigma=sigma,
        refined=refined,
        tau_refined=tau_ref,
        t_refined=t_ref,
        sigma_refined=sigma_ref,
        list_bound=0,
    )
    report.list_bound = list_size_bound(params, report)
    return report


def _designed_list_size(n: int, k: int, t: int) -> int:
    if t == 0:
        return 1
    if k == 1:
        return max(n // (n - t), 1)
    return gs_params(n, k, t).list_bound


def list_size_bound(params: LrcParams, report: RadiusReport, radius: int | None = None) -> int:
    """Bound on output list size: C(G, sigma) * l_local^sigma * l_short."""
    t = report.decoding_radius if radius is None else int(radius)
    t_l = report.t_local
    sigma_used = max(0, min(_sigma_at(params, t, t_l), _shorten_cap(params)))
    if sigma_used == 0:
        return _designed_list_size(params.n, params.super_dim, t)
    l_local = _designed_list_size(params.n_l, params.r, t_l)
    l_short = _designed_list_size(
        params.n - sigma_used * params.n_l,
        params.super_dim - sigma_used * params.n_l,
        t,
    )
    return math.comb(params.groups, sigma_used) * l_local**sigma_used * l_short


@dataclass
class LocalDecodeOutcome:
    """Per-repair-set local list decoding results."""

    lists: list[DecodeList]
    t_local: int

    @property
    def xi(self) -> int:
        return sum(1 for lst in self.lists if len(lst) > 0)

    def usable_sets(self) -> list[int]:
        return [j for j, lst in enumerate(self.lists) if len(lst) > 0]


def local_phase(code: TamoBargCode, w, tau_l: float | None = None) -> LocalDecodeOutcome:
    """List-decode every repair set up to its Johnson radius."""
    w = np.asarray(w, dtype=np.uint16)
    if w.shape != (code.n,):
        raise ParameterError(f"received word must have length {code.n}")
    if tau_l is None:
        tau_l = johnson_radius(code.params.n_l, code.params.rho)
    t_l = t_of_tau(tau_l)
    lists = [
        gs_list_decode(code.local_code_view(j), w[list(code.partition[j])], t_l)
        for j in range(code.params.groups)
    ]
    return LocalDecodeOutcome(lists=lists, t_local=t_l)


@dataclass
class ShortenedInstance:
    """A received word mapped onto a shorter RS instance.

    Divided-difference reduction with the known positions first; the
    constants invert the map.  When the known values are correct, errors
    keep their positions (each scaled by a nonzero factor), so distances
    are preserved.
    """

    reduced_word: np.ndarray
    reduced_points: tuple[int, ...]
    reduced_dim: int
    perm: tuple[int, ...]           # permuted index -> original index
    known_values: tuple[int, ...]
    known_alphas: tuple[int, ...]
    constants: tuple[int, ...]
    delta: int

    def reduced_code(self, field) -> RsCode:
        if self.reduced_dim < 1:
            raise ParameterError("reduced dimension is zero; nothing to decode")
        return RsCode(field, self.reduced_points, self.reduced_dim)


def shorten(code_supercode: RsCode, w, known) -> ShortenedInstance:
    """Fold trusted (position, value) pairs into a shorter instance."""
    w = np.asarray(w, dtype=np.uint16)
    if w.shape != (code_supercode.n,):
        raise ParameterError(f"received word must have length {code_supercode.n}")
    by_pos: dict[int, int] = {}
    for pos, val in known:
        pos = int(pos)
        val = val.value if isinstance(val, Felt) else int(val)
        if not 0 <= pos < code_supercode.n:
            raise ParameterError(f"known position {pos} out of range")
        if pos in by_pos and by_pos[pos] != val:
            raise ParameterError(
                f"inconsistent shortening: position {pos} given two values"
            )
        by_pos[pos] = val
    delta = len(by_pos)
    known_pos = sorted(by_pos)
    rest = [i for i in range(code_supercode.n) if i not in by_pos]
    perm = tuple(known_pos + rest)
    F = code_supercode.field
    alphas = np.asarray([code_supercode.eval_set[i] for i in perm], dtype=np.uint16)
    vals = np.asarray(
        [by_pos.get(i, int(w[i])) for i in perm], dtype=np.uint16
    )
    kernels.dd_reduce_values(F._log, F._alog2, alphas, vals, delta)
    return ShortenedInstance(
        reduced_word=vals[delta:].copy(),
        reduced_points=tuple(int(a) for a in alphas[delta:]),
        reduced_dim=code_supercode.dim - delta,
        perm=perm,
        known_values=tuple(by_pos[i] for i in known_pos),
        known_alphas=tuple(int(a) for a in alphas[:delta]),
        constants=tuple(int(v) for v in vals[:delta]),
        delta=delta,
    )


def unshorten(instance: ShortenedInstance, f_reduced: UniPoly) -> UniPoly:
    """Rebuild the full-length polynomial from its reduced image."""
    return newton_reconstruct(f_reduced, instance.known_alphas, instance.constants)


def _merge_candidates(cands: dict, K: int) -> list[Candidate]:
    out = list(cands.values())
    out.sort(
        key=lambda c: (
            c.distance,
            c.message.coeffs + (0,) * (K - len(c.message.coeffs)),
        )
    )
    return out


def list_decode(
    code: TamoBargCode,
    w,
    radius: int | None = None,
    report: RadiusReport | None = None,
    tighten_shortened: bool = False,
) -> DecodeList:
    """All codewords of the LRC within `radius` of w.

    Defaults to the report's guaranteed radius.  Larger radii up to the
    consistency limit of the shortening argument are accepted; anything
    beyond is rejected.  The combination loop grows as C(xi, sigma), so
    large group counts are a batch job, not an inner loop.
    """
    w = np.asarray(w, dtype=np.uint16)
    if w.shape != (code.n,):
        raise ParameterError(f"received word must have length {code.n}")
    params = code.params
    if report is None:
        report = global_radius(params)
    t = report.decoding_radius if radius is None else int(radius)
    if t < 0:
        raise ParameterError("radius must be nonnegative")
    t_l = report.t_local
    sigma_used = max(0, min(_sigma_at(params, t, t_l), _shorten_cap(params)))
    sup = code.supercode()
    if sigma_used == 0:
        limit = t_of_tau(report.tau_johnson)
        if t > limit:
            raise ParameterError(
                f"radius {t} needs locally decodable sets, but none are "
                f"guaranteed; the direct limit is {limit}"
            )
        inner = gs_list_decode(sup, w, t)
        cands = {
            c.message.coeffs: c for c in inner if code.is_member(c.message)
        }
        return DecodeList(
            candidates=_merge_candidates(cands, params.super_dim),
            radius=t,
            multiplicity=inner.multiplicity,
            designed_list_size=list_size_bound(params, report, t),
        )
    limit = t_of_tau(
        johnson_radius(params.n - sigma_used * params.n_l, params.d)
    )
    if t > limit:
        raise ParameterError(
            f"radius {t} exceeds the shortened-code limit {limit} "
            f"(sigma = {sigma_used})"
        )
    outcome = local_phase(code, w, report.tau_local)
    cands: dict[tuple, Candidate] = {}
    s_used = 1
    for combo in itertools.combinations(outcome.usable_sets(), sigma_used):
        pools = [outcome.lists[j].candidates for j in combo]
        positions = [list(code.partition[j]) for j in combo]
        for choice in itertools.product(*pools):
            local_dist = sum(c.distance for c in choice)
            if local_dist > t:
                continue
            known = [
                (pos, int(v))
                for pos_list, cand in zip(positions, choice)
                for pos, v in zip(pos_list, cand.codeword)
            ]
            inst = shorten(sup, w, known)
            t_short = t - local_dist if tighten_shortened else t
            red = gs_list_decode(
                inst.reduced_code(code.field), inst.reduced_word, t_short
            )
            s_used = max(s_used, red.multiplicity)
            for rc in red:
                f = unshorten(inst, rc.message)
                if f.coeffs in cands or not code.is_member(f):
                    continue
                cw = f.eval_many(code._xs)
                dist = hamming_distance(cw, w)
                if dist <= t:
                    cands[f.coeffs] = Candidate(f, cw, dist)
    return DecodeList(
        candidates=_merge_candidates(cands, params.super_dim),
        radius=t,
        multiplicity=s_used,
        designed_list_size=list_size_bound(params, report, t),
    )
