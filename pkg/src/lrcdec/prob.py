"""Unique decoding beyond half distance, with a success-probability bound.

The unique decoder trusts repair sets whose local list decoding returned
exactly one candidate, shortens by the most reliable such sets, and
succeeds when the global list contains exactly one codeword.  The bound
multiplies the probability of picking only error-free sets by per-phase
unique-decoding probabilities, all on top of a miscorrection rate
estimated (or supplied) for the local codes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError
from .listdec import (
    RadiusReport,
    _shorten_cap,
    _sigma_at,
    global_radius,
    local_phase,
    shorten,
    unshorten,
)
from .lrc import LrcParams, TamoBargCode
from .rs import RsCode, gs_list_decode, hamming_distance, t_of_tau


class FailureReason(enum.Enum):
    INSUFFICIENT_SINGLETONS = "insufficient_singletons"
    GLOBAL_EMPTY = "global_empty"
    GLOBAL_AMBIGUOUS = "global_ambiguous"


@dataclass
class UniqueOutcome:
    """Result of one unique-decoding attempt."""

    status: str                      # "success" | "failure"
    codeword: np.ndarray | None
    message: tuple[int, ...] | None
    distance: int | None
    reason: FailureReason | None
    chosen_sets: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.status == "success"


def unique_decode_report(
    code: TamoBargCode,
    w,
    radius: int | None = None,
    report: RadiusReport | None = None,
) -> UniqueOutcome:
    """Decode to a single codeword or report why that was impossible.

    Success means the global phase saw exactly one codeword within the
    radius; with badly miscorrected repair sets that codeword can still
    differ from the transmitted one, which is what the probability model
    quantifies.
    """
    w = np.asarray(w, dtype=np.uint16)
    if w.shape != (code.n,):
        raise ParameterError(f"received word must have length {code.n}")
    params = code.params
    if report is None:
        report = global_radius(params)
    t = report.t_global if radius is None else int(radius)
    if t < 0:
        raise ParameterError("radius must be nonnegative")
    t_l = report.t_local
    sigma_used = max(0, min(_sigma_at(params, t, t_l), _shorten_cap(params)))
    sup = code.supercode()

    def finish(cands: list, chosen: tuple[int, ...]) -> UniqueOutcome:
        if len(cands) == 1:
            f, cw, dist = cands[0]
            msg = tuple(int(v) for v in code.poly_to_message(f))
            return UniqueOutcome("success", cw, msg, dist, None, chosen)
        reason = (
            FailureReason.GLOBAL_EMPTY if not cands
            else FailureReason.GLOBAL_AMBIGUOUS
        )
        return UniqueOutcome("failure", None, None, None, reason, chosen)

    if sigma_used == 0:
        if t > t_of_tau(report.tau_johnson):
            raise ParameterError(
                f"radius {t} needs locally decodable sets; "
                f"the direct limit is {t_of_tau(report.tau_johnson)}"
            )
        inner = gs_list_decode(sup, w, t)
        cands = [
            (c.message, c.codeword, c.distance)
            for c in inner
            if code.is_member(c.message)
        ]
        return finish(cands, ())

    outcome = local_phase(code, w, report.tau_local)
    singles = [
        (outcome.lists[j].candidates[0].distance, j)
        for j in range(params.groups)
        if len(outcome.lists[j]) == 1
    ]
    if len(singles) < sigma_used:
        return UniqueOutcome(
            "failure", None, None, None,
            FailureReason.INSUFFICIENT_SINGLETONS, (),
        )
    singles.sort()
    chosen = tuple(j for _, j in singles[:sigma_used])
    known = []
    for j in chosen:
        cand = outcome.lists[j].candidates[0]
        known.extend(zip(code.partition[j], (int(v) for v in cand.codeword)))
    inst = shorten(sup, w, known)
    red = gs_list_decode(inst.reduced_code(code.field), inst.reduced_word, t)
    cands = []
    for rc in red:
        f = unshorten(inst, rc.message)
        if not code.is_member(f):
            continue
        cw = f.eval_many(code._xs)
        dist = hamming_distance(cw, w)
        if dist <= t:
            cands.append((f, cw, dist))
    return finish(cands, chosen)


def unique_decode(
    code: TamoBargCode,
    w,
    radius: int | None = None,
    report: RadiusReport | None = None,
) -> np.ndarray | None:
    """The decoded codeword, or None when decoding failed."""
    return unique_decode_report(code, w, radius, report).codeword


@dataclass
class MiscorrectionModel:
    """Inputs to the success-probability bound.

    p_e is the worst-case probability that a repair set with more errors
    than the local radius still returns a nonempty list; the unique
    probabilities are worst cases of the list being a singleton in the
    decodable regime.
    """

    p_e: float
    p_local_unique: float
    p_global_unique: float
    provenance: str = "supplied"     # "supplied" | "estimated"
    trials: int = 0
    seed: int | None = None
    p_e_by_weight: dict[int, float] = field(default_factory=dict)
    local_unique_by_weight: dict[int, float] = field(default_factory=dict)
    global_unique_by_weight: dict[int, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("p_e", "p_local_unique", "p_global_unique"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ParameterError(f"{name} must lie in [0, 1], got {v}")

    def to_dict(self) -> dict:
        return {
            "p_e": self.p_e,
            "p_local_unique": self.p_local_unique,
            "p_global_unique": self.p_global_unique,
            "provenance": self.provenance,
            "trials": self.trials,
            "seed": self.seed,
        }


def p_f(p_e: float, groups: int, sigma: int) -> float:
    """Probability that every trusted repair set was error-free.

    Conditioning on i of the undecodable sets miscorrecting, the sigma
    trusted sets are a uniform choice among sigma + i plausible ones.
    """
    if not 0.0 <= p_e <= 1.0:
        raise ParameterError(f"p_e must lie in [0, 1], got {p_e}")
    if not 0 <= sigma <= groups:
        raise ParameterError("need 0 <= sigma <= groups")
    total = 0.0
    for i in range(groups - sigma + 1):
        total += (
            p_e**i
            * (1.0 - p_e) ** (groups - sigma - i)
            / math.comb(sigma + i, sigma)
        )
    return total


def p_suc_bound(model: MiscorrectionModel, params: LrcParams, sigma: int) -> float:
    """Lower bound on unique-decoding success probability."""
    pf = p_f(model.p_e, params.groups, sigma)
    return pf * model.p_local_unique**sigma * model.p_global_unique


def _rate(hits: int, trials: int) -> float:
    return hits / trials if trials else 0.0


def estimate_model(
    code: TamoBargCode,
    t_l: int | None = None,
    t_g: int | None = None,
    trials: int = 400,
    seed: int = 0,
) -> MiscorrectionModel:
    """Monte-Carlo estimates of the model parameters for one code.

    Every repair set carries the same local code (the evaluation sets
    are scalings of one subgroup, which permutes the polynomial space),
    so one local view represents them all.  The global phase is modeled
    on the code shortened by the sets the decoder trusts.
    """
    if trials < 1:
        raise ParameterError("trials must be positive")
    params = code.params
    report = global_radius(params)
    if t_l is None:
        t_l = report.t_local
    if t_g is None:
        t_g = report.t_global
    sigma_used = max(0, min(_sigma_at(params, t_g, t_l), _shorten_cap(params)))
    local = code.local_code_view(0)
    n_l = params.n_l

    def local_trials(weight: int, tag: int, want_len):
        rng = np.random.default_rng([seed, tag, weight])
        hits = 0
        for _ in range(trials):
            w = np.zeros(n_l, dtype=np.uint16)
            pos = rng.choice(n_l, weight, replace=False)
            w[pos] = rng.integers(1, params.q, weight)
            if want_len(len(gs_list_decode(local, w, t_l))):
                hits += 1
        return _rate(hits, trials)

    p_e_by_weight = {
        e: local_trials(e, 1, lambda l: l > 0) for e in range(t_l + 1, n_l + 1)
    }
    local_unique_by_weight = {
        e: local_trials(e, 2, lambda l: l == 1) for e in range(t_l + 1)
    }

    if sigma_used > 0:
        red_n = params.n - sigma_used * n_l
        red = RsCode(
            code.field, code.eval_set[sigma_used * n_l:],
            params.super_dim - sigma_used * n_l,
        )
    else:
        red_n = params.n
        red = code.supercode()
    global_unique_by_weight = {}
    for e in range(min(t_g, red_n) + 1):
        rng = np.random.default_rng([seed, 3, e])
        hits = 0
        for _ in range(trials):
            w = np.zeros(red_n, dtype=np.uint16)
            pos = rng.choice(red_n, e, replace=False)
            w[pos] = rng.integers(1, params.q, e)
            if len(gs_list_decode(red, w, t_g)) == 1:
                hits += 1
        global_unique_by_weight[e] = _rate(hits, trials)

    return MiscorrectionModel(
        p_e=max(p_e_by_weight.values(), default=0.0),
        p_local_unique=min(local_unique_by_weight.values(), default=1.0),
        p_global_unique=min(global_unique_by_weight.values(), default=1.0),
        provenance="estimated",
        trials=trials,
        seed=seed,
        p_e_by_weight=p_e_by_weight,
        local_unique_by_weight=local_unique_by_weight,
        global_unique_by_weight=global_unique_by_weight,
    )
