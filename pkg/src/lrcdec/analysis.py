"""Rate/radius analysis: asymptotic curves, gain tables, parameter sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ParameterError
from .listdec import RadiusReport, global_radius
from .lrc import LrcParams
from .prob import MiscorrectionModel, p_suc_bound


def rate(params: LrcParams) -> float:
    """Code rate in terms of relative distance and the repair overhead."""
    n, d, rho, r = params.n, params.d, params.rho, params.r
    return (1.0 - d / n + rho / n) * r / (r + rho - 1)


@dataclass(frozen=True)
class CurvePoint:
    x: float        # relative distance d/n
    y: float        # normalized decoding radius tau/n
    beta: float


def johnson_normalized(x: float) -> float:
    """Normalized Johnson radius 1 - sqrt(1 - x)."""
    if not 0.0 <= x <= 1.0:
        raise ParameterError("relative distance must lie in [0, 1]")
    return 1.0 - math.sqrt(1.0 - x)


def normalized_radius_curve(
    beta: float, grid: Iterable[float]
) -> list[CurvePoint]:
    """Normalized radius x / (1 + sqrt(1 - beta * x)) over the grid.

    Grid points with beta * x > 1 are outside the regime and skipped;
    curve_csv reports them.  At beta = 1 the curve equals the Johnson
    curve; at beta * x = 1 it touches the Singleton line y = x.
    """
    if beta <= 0:
        raise ParameterError("beta must be positive")
    points = []
    for x in grid:
        if not 0.0 <= x <= 1.0:
            raise ParameterError("relative distance must lie in [0, 1]")
        if beta * x > 1.0:
            continue
        y = x / (1.0 + math.sqrt(1.0 - beta * x))
        points.append(CurvePoint(x=x, y=y, beta=beta))
    return points


def curve_csv(beta: float, steps: int) -> tuple[str, list[str]]:
    """CSV of the normalized curve with Johnson and Singleton columns.

    The grid is `steps` even intervals on [0, 1] plus the exact contact
    point x = 1/beta when it lies inside.  Returns (csv text, notes).
    """
    if steps < 1:
        raise ParameterError("steps must be positive")
    grid = [i / steps for i in range(steps + 1)]
    if beta > 1.0 and 1.0 / beta not in grid:
        grid.append(1.0 / beta)
        grid.sort()
    notes = []
    dropped = [x for x in grid if beta * x > 1.0]
    if dropped:
        notes.append(
            f"{len(dropped)} grid points with beta*x > 1 dropped "
            f"(first: {dropped[0]!r})"
        )
    lines = ["d_over_n,tau_over_n,johnson_over_n,singleton_over_n"]
    for p in normalized_radius_curve(beta, grid):
        lines.append(
            f"{p.x!r},{p.y!r},{johnson_normalized(p.x)!r},{p.x!r}"
        )
    return "\n".join(lines) + "\n", notes


def _pow2_at_least(n: int) -> int:
    q = 1
    while q < n:
        q *= 2
    return q


@dataclass(frozen=True)
class GainRow:
    params: LrcParams
    tau_johnson: float
    tau_global: float
    tau_refined: float
    gain: float             # tau_global / tau_johnson
    gain_refined: float


def gain_table(
    n: int,
    n_l: int,
    rho_values: Sequence[int],
    k_grid: Sequence[int] | None = None,
) -> tuple[list[GainRow], list[tuple[int, int, str]]]:
    """Radius gain over Johnson for a sweep of local parameters.

    Without an explicit k grid, every multiple of r that admits a valid
    parameter set is used.  Returns (rows, skipped) where skipped holds
    (rho, k, reason) triples.
    """
    q = _pow2_at_least(n + 1)
    rows: list[GainRow] = []
    skipped: list[tuple[int, int, str]] = []
    for rho in rho_values:
        r = n_l - rho + 1
        if r < 1:
            skipped.append((rho, 0, f"rho {rho} exceeds set size {n_l}"))
            continue
        if n % n_l:
            skipped.append((rho, 0, f"set size {n_l} does not divide {n}"))
            continue
        ks = list(k_grid) if k_grid is not None else list(
            range(r, r * (n // n_l) + 1, r)
        )
        for k in ks:
            try:
                params = LrcParams(q=q, n=n, k=k, r=r, rho=rho)
            except ParameterError as exc:
                skipped.append((rho, k, str(exc)))
                continue
            if params.d < 1:
                skipped.append((rho, k, "designed distance below 1"))
                continue
            rep = global_radius(params)
            rows.append(
                GainRow(
                    params=params,
                    tau_johnson=rep.tau_johnson,
                    tau_global=rep.tau_global,
                    tau_refined=rep.tau_refined,
                    gain=rep.tau_global / rep.tau_johnson,
                    gain_refined=rep.tau_refined / rep.tau_johnson,
                )
            )
    return rows, skipped


def gain_csv(
    n: int,
    n_l: int,
    rho_values: Sequence[int],
    k_grid: Sequence[int] | None = None,
) -> tuple[str, list[str]]:
    rows, skipped = gain_table(n, n_l, rho_values, k_grid)
    lines = [
        "n,n_l,rho,r,k,d,beta,tau_johnson,tau_global,tau_refined,"
        "gain,gain_refined"
    ]
    for row in rows:
        p = row.params
        beta = p.n * p.rho / (p.n_l * p.d)
        lines.append(
            f"{p.n},{p.n_l},{p.rho},{p.r},{p.k},{p.d},{beta!r},"
            f"{row.tau_johnson!r},{row.tau_global!r},{row.tau_refined!r},"
            f"{row.gain!r},{row.gain_refined!r}"
        )
    notes = [f"skipped rho={rho} k={k}: {why}" for rho, k, why in skipped]
    return "\n".join(lines) + "\n", notes


@dataclass(frozen=True)
class SweepRow:
    params: LrcParams
    report: RadiusReport
    p_suc: float | None


ModelSource = (
    MiscorrectionModel
    | Mapping[int, MiscorrectionModel]
    | Callable[[LrcParams], MiscorrectionModel]
    | None
)


def table1(rows: Iterable, model: ModelSource = None) -> list[SweepRow]:
    """Radius sweep over explicit parameter sets.

    Each row is an LrcParams or a dict accepted by LrcParams.from_dict.
    `model` optionally supplies miscorrection models (one for all rows,
    a mapping from row index, or a callable on params) to add a
    success-probability bound column.
    """
    out: list[SweepRow] = []
    for idx, row in enumerate(rows):
        params = row if isinstance(row, LrcParams) else LrcParams.from_dict(row)
        rep = global_radius(params)
        if model is None:
            m = None
        elif isinstance(model, MiscorrectionModel):
            m = model
        elif callable(model):
            m = model(params)
        else:
            m = model.get(idx)
        p = p_suc_bound(m, params, rep.sigma) if m is not None else None
        out.append(SweepRow(params=params, report=rep, p_suc=p))
    return out


def render_table(rows: list[SweepRow]) -> str:
    """Fixed-width text table, reals rounded to two decimals."""
    header = ["n", "k", "r", "rho", "d", "tau_johnson", "tau_global",
              "tau_refined", "sigma"]
    with_p = any(r.p_suc is not None for r in rows)
    if with_p:
        header.append("p_suc_bound")
    body = []
    for r in rows:
        p = r.params
        line = [
            str(p.n), str(p.k), str(p.r), str(p.rho), str(p.d),
            f"{r.report.tau_johnson:.2f}", f"{r.report.tau_global:.2f}",
            f"{r.report.tau_refined:.2f}", str(r.report.sigma),
        ]
        if with_p:
            line.append("-" if r.p_suc is None else f"{r.p_suc:.2f}")
        body.append(line)
    widths = [
        max(len(header[i]), *(len(row[i]) for row in body)) if body
        else len(header[i])
        for i in range(len(header))
    ]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    lines = [fmt.format(*header)]
    lines.extend(fmt.format(*row) for row in body)
    return "\n".join(lines) + "\n"


def table_csv(rows: list[SweepRow]) -> str:
    """Full-precision CSV companion to render_table."""
    lines = [
        "n,k,r,rho,d,beta,tau_johnson,tau_global,tau_refined,sigma,"
        "t_refined,p_suc_bound"
    ]
    for r in rows:
        p = r.params
        psuc = "" if r.p_suc is None else repr(r.p_suc)
        lines.append(
            f"{p.n},{p.k},{p.r},{p.rho},{p.d},{r.report.beta!r},"
            f"{r.report.tau_johnson!r},{r.report.tau_global!r},"
            f"{r.report.tau_refined!r},{r.report.sigma},"
            f"{r.report.t_refined},{psuc}"
        )
    return "\n".join(lines) + "\n"
