"""Monte-Carlo decoding trials, deterministic and parallel.

Every trial derives its generator from (seed, trial index), so results
are a pure function of the invocation and identical whether trials run
serially or across processes.
"""

from __future__ import annotations

import csv
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .listdec import global_radius, list_decode
from .lrc import LrcParams, TamoBargCode
from .prob import estimate_model, p_suc_bound, unique_decode_report

DECODERS = ("list", "unique")


def thread_cap() -> int | None:
    """Worker-count cap from LRCDEC_THREADS, if set."""
    raw = os.environ.get("LRCDEC_THREADS", "").strip()
    if not raw:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise ParameterError(f"LRCDEC_THREADS must be an integer, got {raw!r}")
    if cap < 1:
        raise ParameterError("LRCDEC_THREADS must be at least 1")
    return cap


def resolve_workers(requested: int | None) -> int:
    cap = thread_cap()
    if requested is not None:
        if requested < 1:
            raise ParameterError("workers must be at least 1")
        return min(requested, cap) if cap else requested
    workers = min(os.cpu_count() or 1, 8)
    return min(workers, cap) if cap else workers


@dataclass(frozen=True)
class TrialRow:
    trial: int
    outcome: str        # success | wrong_codeword | miss | failure
    list_size: int
    reason: str


def run_trial(
    code: TamoBargCode, decoder: str, radius: int | None, weight: int,
    seed: int, trial: int, report,
) -> TrialRow:
    params = code.params
    rng = np.random.default_rng([seed, trial])
    msg = rng.integers(0, params.q, params.k)
    cw = code.encode(msg)
    w = cw.copy()
    pos = rng.choice(params.n, weight, replace=False)
    w[pos] ^= rng.integers(1, params.q, weight).astype(np.uint16)
    if decoder == "list":
        out = list_decode(code, w, radius=radius, report=report)
        hit = out.contains_codeword(cw)
        return TrialRow(trial, "success" if hit else "miss", len(out), "")
    out = unique_decode_report(code, w, radius=radius, report=report)
    if out.ok:
        if np.array_equal(out.codeword, cw):
            return TrialRow(trial, "success", 1, "")
        return TrialRow(trial, "wrong_codeword", 1, "")
    return TrialRow(trial, "failure", 0, out.reason.value)


def _run_chunk(args) -> list[TrialRow]:
    params_dict, decoder, radius, weight, seed, lo, hi = args
    params = LrcParams.from_dict(params_dict)
    code = TamoBargCode(params)
    report = global_radius(params)
    return [
        run_trial(code, decoder, radius, weight, seed, t, report)
        for t in range(lo, hi)
    ]


def run_simulation(
    params: LrcParams,
    decoder: str = "list",
    trials: int = 100,
    weight: int = 0,
    seed: int = 0,
    radius: int | None = None,
    workers: int | None = None,
    model_trials: int = 0,
    csv_path: str | None = None,
) -> tuple[list[TrialRow], dict]:
    """Run decoding trials; returns (per-trial rows, summary dict).

    The summary never mentions the worker count, so serial and parallel
    runs of the same invocation emit identical bytes.
    """
    if decoder not in DECODERS:
        raise ParameterError(f"decoder must be one of {DECODERS}")
    if trials < 1:
        raise ParameterError("trials must be positive")
    if not 0 <= weight <= params.n:
        raise ParameterError(f"weight must lie in [0, {params.n}]")
    nworkers = resolve_workers(workers)
    job = (params.to_dict(), decoder, radius, weight, seed)
    if nworkers == 1 or trials == 1:
        rows = _run_chunk(job + (0, trials))
    else:
        chunk = max(1, -(-trials // (nworkers * 4)))
        spans = [
            (lo, min(lo + chunk, trials)) for lo in range(0, trials, chunk)
        ]
        with ProcessPoolExecutor(max_workers=nworkers) as pool:
            parts = list(pool.map(_run_chunk, [job + span for span in spans]))
        rows = [row for part in parts for row in part]
    rows.sort(key=lambda r: r.trial)

    report = global_radius(params)
    used_radius = radius
    if used_radius is None:
        used_radius = (
            report.decoding_radius if decoder == "list" else report.t_global
        )
    successes = sum(1 for r in rows if r.outcome == "success")
    failures: dict[str, int] = {}
    for r in rows:
        if r.outcome == "failure":
            failures[r.reason] = failures.get(r.reason, 0) + 1
    summary = {
        "decoder": decoder,
        "trials": trials,
        "weight": weight,
        "radius": used_radius,
        "seed": seed,
        "success": successes,
        "success_rate": successes / trials,
    }
    if decoder == "list":
        summary["miss"] = sum(1 for r in rows if r.outcome == "miss")
        summary["max_list_size"] = max(r.list_size for r in rows)
    else:
        summary["wrong_codeword"] = sum(
            1 for r in rows if r.outcome == "wrong_codeword"
        )
        summary["failures"] = dict(sorted(failures.items()))
        if model_trials > 0:
            code = TamoBargCode(params)
            model = estimate_model(
                code, t_l=report.t_local, t_g=used_radius,
                trials=model_trials, seed=seed,
            )
            sigma = max(0, min(
                params.groups - used_radius // (report.t_local + 1),
                (params.super_dim - 1) // params.n_l,
            ))
            summary["p_suc_bound"] = p_suc_bound(model, params, sigma)
            summary["model"] = model.to_dict()
    if csv_path:
        write_rows_csv(csv_path, rows)
    return rows, summary


def write_rows_csv(path: str, rows: list[TrialRow]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trial", "outcome", "list_size", "reason"])
        for r in rows:
            writer.writerow([r.trial, r.outcome, r.list_size, r.reason])
