"""Hot-loop kernels with two interchangeable backends.

The compiled extension (_speedups, Cython) is preferred; a numpy
reference (_pyref) is the fallback.  LRCDEC_BACKEND=c demands the
compiled one, LRCDEC_BACKEND=py forces the fallback, unset picks
automatically.  Both produce byte-identical outputs.
"""

import os

from . import _pyref

_choice = os.environ.get("LRCDEC_BACKEND", "").strip().lower()

if _choice in ("", "auto"):
    try:
        from . import _speedups as _impl

        BACKEND = "c"
    except ImportError:
        _impl = _pyref
        BACKEND = "py"
elif _choice == "c":
    from . import _speedups as _impl

    BACKEND = "c"
elif _choice == "py":
    _impl = _pyref
    BACKEND = "py"
else:
    raise RuntimeError(
        f"LRCDEC_BACKEND must be 'c', 'py', or unset, got {_choice!r}"
    )

eval_poly_many = _impl.eval_poly_many
dd_reduce_values = _impl.dd_reduce_values
gs_matrix = _impl.gs_matrix
nullspace_vector = _impl.nullspace_vector
rr_roots = _impl.rr_roots

# Cold-path helpers are numpy-only; no compiled twin needed.
vandermonde = _pyref.vandermonde
mul_vec = _pyref.mul_vec


def backend_module(name: str):
    """Return a specific backend module ('c' or 'py') for cross-checks."""
    if name == "py":
        return _pyref
    if name == "c":
        from . import _speedups

        return _speedups
    raise ValueError(f"unknown backend {name!r}")
