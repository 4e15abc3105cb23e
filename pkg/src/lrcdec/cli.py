"""Command-line interface.

Word files are plain text: one word per line, decimal values separated
by spaces.  Exit codes: 0 for success (a decoding that finds nothing
still exits 0), 2 for usage or parameter errors, 3 for internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .analysis import curve_csv, gain_csv, render_table, table1, table_csv
from .errors import ParameterError
from .listdec import global_radius, list_decode
from .lrc import LrcParams, TamoBargCode
from .prob import unique_decode_report
from .simulate import run_simulation

USAGE_EXIT = 2
INTERNAL_EXIT = 3


def _add_code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True, help="field size (power of 2)")
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("--k", type=int, required=True, help="dimension")
    p.add_argument("--r", type=int, required=True, help="locality")
    p.add_argument("--rho", type=int, required=True, help="local distance")


def _build_code(args) -> TamoBargCode:
    params = LrcParams(q=args.q, n=args.n, k=args.k, r=args.r, rho=args.rho)
    return TamoBargCode(params)


def read_word_file(path: str, length: int, q: int) -> list[np.ndarray]:
    """Words as uint16 arrays; any malformed line is a parameter error."""
    words = []
    try:
        with open(path) as fh:
            raw_lines = fh.read().splitlines()
    except OSError as exc:
        raise ParameterError(f"cannot read {path}: {exc}")
    for lineno, line in enumerate(raw_lines, 1):
        if not line.strip():
            continue
        try:
            vals = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParameterError(f"{path}:{lineno}: non-integer entry")
        if len(vals) != length:
            raise ParameterError(
                f"{path}:{lineno}: expected {length} values, got {len(vals)}"
            )
        if any(not 0 <= v < q for v in vals):
            raise ParameterError(
                f"{path}:{lineno}: values must lie in [0, {q})"
            )
        words.append(np.asarray(vals, dtype=np.uint16))
    if not words:
        raise ParameterError(f"{path}: no words found")
    return words


def write_word_lines(words, out_path: str | None) -> None:
    text = "\n".join(" ".join(str(int(v)) for v in w) for w in words) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_radius(args) -> int:
    params = LrcParams(q=args.q, n=args.n, k=args.k, r=args.r, rho=args.rho)
    _emit_json(global_radius(params).to_dict())
    return 0


def cmd_encode(args) -> int:
    code = _build_code(args)
    msgs = read_word_file(args.message_file, code.params.k, code.params.q)
    write_word_lines([code.encode(m) for m in msgs], args.out)
    return 0


def cmd_corrupt(args) -> int:
    words = []
    try:
        with open(args.word_file) as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    except OSError as exc:
        raise ParameterError(f"cannot read {args.word_file}: {exc}")
    if not lines:
        raise ParameterError(f"{args.word_file}: no words found")
    length = len(lines[0].split())
    words = read_word_file(args.word_file, length, args.q)
    if not 0 <= args.weight <= length:
        raise ParameterError(f"weight must lie in [0, {length}]")
    out_words = []
    sidecar = []
    for i, w in enumerate(words):
        rng = np.random.default_rng([args.seed, i])
        pos = np.sort(rng.choice(length, args.weight, replace=False))
        vals = rng.integers(1, args.q, args.weight).astype(np.uint16)
        ww = w.copy()
        ww[pos] ^= vals
        out_words.append(ww)
        sidecar.append({
            "positions": [int(p) for p in pos],
            "values": [int(ww[p]) for p in pos],
        })
    write_word_lines(out_words, args.out)
    sidecar_path = (args.out or args.word_file) + ".errors.json"
    with open(sidecar_path, "w") as fh:
        json.dump(sidecar, fh, indent=2)
        fh.write("\n")
    return 0


def cmd_list_decode(args) -> int:
    code = _build_code(args)
    words = read_word_file(args.word_file, code.params.n, code.params.q)
    report = global_radius(code.params)
    results = []
    for w in words:
        out = list_decode(code, w, radius=args.radius, report=report)
        results.append({
            "radius": out.radius,
            "count": len(out),
            "candidates": [
                {
                    "message": [int(v) for v in code.poly_to_message(c.message)],
                    "codeword": [int(v) for v in c.codeword],
                    "distance": c.distance,
                }
                for c in out
            ],
        })
    _emit_json(results)
    return 0


def cmd_unique_decode(args) -> int:
    code = _build_code(args)
    words = read_word_file(args.word_file, code.params.n, code.params.q)
    report = global_radius(code.params)
    results = []
    for w in words:
        out = unique_decode_report(code, w, radius=args.radius, report=report)
        if out.ok:
            results.append({
                "status": "success",
                "message": list(out.message),
                "codeword": [int(v) for v in out.codeword],
                "distance": out.distance,
                "trusted_sets": list(out.chosen_sets),
            })
        else:
            results.append({"status": "failure", "reason": out.reason.value})
    _emit_json(results)
    return 0


def cmd_simulate(args) -> int:
    params = LrcParams(q=args.q, n=args.n, k=args.k, r=args.r, rho=args.rho)
    _, summary = run_simulation(
        params,
        decoder=args.decoder,
        trials=args.trials,
        weight=args.weight,
        seed=args.seed,
        radius=args.radius,
        workers=args.workers,
        model_trials=args.model_trials,
        csv_path=args.csv,
    )
    _emit_json(summary)
    return 0


def cmd_table(args) -> int:
    try:
        with open(args.rows_file) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParameterError(f"cannot read {args.rows_file}: {exc}")
    except json.JSONDecodeError as exc:
        raise ParameterError(f"{args.rows_file}: invalid JSON: {exc}")
    if not isinstance(raw, list) or not raw:
        raise ParameterError(f"{args.rows_file}: expected a list of rows")
    rows = table1(raw)
    sys.stdout.write(render_table(rows))
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(table_csv(rows))
    return 0


def cmd_curve(args) -> int:
    text, notes = curve_csv(args.beta, args.steps)
    sys.stdout.write(text)
    for note in notes:
        print(note, file=sys.stderr)
    return 0


def cmd_gain(args) -> int:
    text, notes = gain_csv(args.n, args.nl, args.rho, args.k)
    sys.stdout.write(text)
    for note in notes:
        print(note, file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lrcdec",
        description="Construct and decode locally repairable codes.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="decoding radii for a parameter set")
    _add_code_args(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("encode", help="encode message words")
    _add_code_args(p)
    p.add_argument("--message-file", required=True)
    p.add_argument("--out", help="output word file (default stdout)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="add random errors of a fixed weight")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--word-file", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output word file (default stdout); the "
                   "error sidecar goes next to it")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("list-decode", help="all codewords within the radius")
    _add_code_args(p)
    p.add_argument("--word-file", required=True)
    p.add_argument("--radius", type=int)
    p.set_defaults(func=cmd_list_decode)

    p = sub.add_parser("unique-decode", help="decode to a single codeword")
    _add_code_args(p)
    p.add_argument("--word-file", required=True)
    p.add_argument("--radius", type=int)
    p.set_defaults(func=cmd_unique_decode)

    p = sub.add_parser("simulate", help="random decoding trials")
    _add_code_args(p)
    p.add_argument("--decoder", choices=("list", "unique"), default="list")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--radius", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--model-trials", type=int, default=0,
                   help="trials per weight for the success bound (0 = skip)")
    p.add_argument("--csv", help="write per-trial rows to this file")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("table", help="radius sweep over parameter rows")
    p.add_argument("--rows-file", required=True,
                   help="JSON list of {q, n, k, r, rho} objects")
    p.add_argument("--csv", help="also write full-precision CSV here")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("curve", help="normalized radius curve CSV")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--steps", type=int, default=200)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("gain", help="radius gain over the Johnson bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nl", type=int, required=True, help="repair-set size")
    p.add_argument("--rho", type=int, nargs="+", required=True)
    p.add_argument("--k", type=int, nargs="+",
                   help="dimensions to include (default: multiples of r)")
    p.set_defaults(func=cmd_gain)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except BrokenPipeError:
        return 0
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return INTERNAL_EXIT


if __name__ == "__main__":
    sys.exit(main())
