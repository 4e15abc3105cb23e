"""Compare the compiled kernels against the pure-Python reference.

Times the hot path of a list decoder run (constraint matrix, nullspace,
root finding) plus the divided-difference reduction, on mid-size codes.

    python3 benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lrcdec.gf import field_new
from lrcdec.kernels import backend_module
from lrcdec.lrc import tb_construct
from lrcdec.rs import RsCode, gs_list_decode


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def decode_bench(backend: str, repeat: int) -> dict[str, float]:
    import lrcdec.kernels as K
    impl = backend_module(backend)
    saved = {
        name: getattr(K, name)
        for name in ("eval_poly_many", "dd_reduce_values", "gs_matrix",
                     "nullspace_vector", "rr_roots")
    }
    try:
        for name in saved:
            setattr(K, name, getattr(impl, name))
        F = field_new(6)
        code = tb_construct(64, 63, 8, 14, k=16)
        sup = code.supercode()
        red = RsCode(F, code.eval_set[21:], 8)
        rng = np.random.default_rng(0)
        local = code.local_code_view(0)

        msg = rng.integers(0, 64, 16)
        cw = code.encode(msg)
        w = cw.copy()
        pos = rng.choice(63, 22, replace=False)
        w[pos] ^= rng.integers(1, 64, 22).astype(np.uint16)

        out = {}
        out["gs [42,8] t=22"] = time_call(
            lambda: gs_list_decode(red, w[:42], 22), repeat)
        out["gs [21,8] t=8"] = time_call(
            lambda: gs_list_decode(local, w[:21], 8), repeat)
        alphas = np.asarray(sup.eval_set, dtype=np.uint16)

        def dd():
            vals = w.copy()
            impl.dd_reduce_values(F._log, F._alog2, alphas, vals, 21)

        out["dd reduce delta=21"] = time_call(dd, repeat)
        return out
    finally:
        for name, fn in saved.items():
            setattr(K, name, fn)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    results = {}
    for backend in ("py", "c"):
        try:
            results[backend] = decode_bench(backend, args.repeat)
        except RuntimeError as exc:
            print(f"backend {backend!r} unavailable: {exc}")
    if "py" in results and "c" in results:
        print(f"{'benchmark':<22} {'pure py':>12} {'compiled':>12} {'speedup':>9}")
        for name in results["py"]:
            tp, tc = results["py"][name], results["c"][name]
            print(f"{name:<22} {tp*1e3:>10.2f}ms {tc*1e3:>10.2f}ms {tp/tc:>8.1f}x")
    else:
        for backend, vals in results.items():
            for name, t in vals.items():
                print(f"{backend} {name:<22} {t*1e3:.2f}ms")


if __name__ == "__main__":
    main()
