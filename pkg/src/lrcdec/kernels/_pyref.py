"""Numpy fallback kernels; mirrored one-for-one by the compiled backend.

All functions take raw table views (log, alog2) from a Field plus uint16
element arrays.  alog2 is the antilog table doubled so an index of
log[a] + log[b] needs no reduction.  Callers own all output arrays.
"""

from __future__ import annotations

import numpy as np

_I32 = np.int32


def _q(log: np.ndarray) -> int:
    return len(log)


def eval_poly_many(log, alog2, coeffs, xs):
    """Evaluate one dense polynomial (coeffs low to high) at many points."""
    xs = np.asarray(xs, dtype=np.uint16)
    q1 = _q(log) - 1
    lx = log[xs].astype(_I32)
    xzero = xs == 0
    acc = np.zeros(len(xs), dtype=np.uint16)
    for c in coeffs[::-1]:
        prod = np.zeros(len(xs), dtype=np.uint16)
        live = (acc != 0) & ~xzero
        if live.any():
            prod[live] = alog2[log[acc[live]].astype(_I32) + lx[live]]
        acc = prod
        acc ^= np.uint16(c)
    if xzero.any() and len(coeffs):
        acc[xzero] = np.uint16(coeffs[0])
    return acc


def dd_reduce_values(log, alog2, alphas, vals, delta):
    """Divided-difference pass over received values, in place.

    After step s every entry i > s holds the level-s value
    (v_i - v_s) / (alpha_i - alpha_s); the tail [delta:] is the word of
    the reduced code on the points alphas[delta:].
    """
    q1 = _q(log) - 1
    n = len(vals)
    for s in range(delta):
        tail = slice(s + 1, n)
        diff = vals[tail] ^ vals[s]
        den = alphas[tail] ^ alphas[s]
        linv = q1 - log[den].astype(_I32)
        out = np.zeros(n - s - 1, dtype=np.uint16)
        nz = diff != 0
        if nz.any():
            out[nz] = alog2[log[diff[nz]].astype(_I32) + linv[nz]]
        vals[tail] = out
    return vals


def gs_matrix(log, alog2, xs, ys, s, monos_i, monos_j):
    """Interpolation constraint matrix: one row per (point, a, b), a+b < s.

    Entry for monomial x^i y^j is C(i,a) C(j,b) x^(i-a) y^(j-b) with the
    binomials taken mod 2 (nonzero iff the subtracted exponent's bits
    cover the derivative order's bits).
    """
    q1 = _q(log) - 1
    mi = np.asarray(monos_i, dtype=np.int64)
    mj = np.asarray(monos_j, dtype=np.int64)
    ncols = len(mi)
    nrows = len(xs) * (s * (s + 1) // 2)
    M = np.zeros((nrows, ncols), dtype=np.uint16)
    row = 0
    for p in range(len(xs)):
        x = int(xs[p])
        y = int(ys[p])
        lgx = int(log[x]) if x else 0
        lgy = int(log[y]) if y else 0
        for a in range(s):
            for b in range(s - a):
                ok = ((mi & a) == a) & ((mj & b) == b)
                e1 = mi - a
                e2 = mj - b
                if x == 0:
                    ok = ok & (e1 == 0)
                if y == 0:
                    ok = ok & (e2 == 0)
                lg = (lgx * e1 + lgy * e2) % q1
                M[row] = np.where(ok, alog2[lg], 0)
                row += 1
    return M


def nullspace_vector(log, alog2, M):
    """Canonical nullspace element of M over the field, or None.

    Forward elimination with first-nonzero pivoting stops at the first
    linearly dependent column; the returned vector has that column as its
    leading (highest-index) support, value 1, making the result the
    nullspace element of minimal leading column, identical across
    backends.  M is clobbered.
    """
    q1 = _q(log) - 1
    nrows, ncols = M.shape
    row_used = np.zeros(nrows, dtype=bool)
    pivot_row_of = np.full(ncols, -1, dtype=np.int64)
    pivot_cols = []
    free_col = -1
    for col in range(ncols):
        nzcol = M[:, col] != 0
        cand = np.flatnonzero(nzcol & ~row_used)
        if cand.size == 0:
            free_col = col
            break
        r = int(cand[0])
        row_used[r] = True
        pivot_row_of[col] = r
        pv = int(M[r, col])
        if pv != 1:
            seg = M[r, col:]
            nz = seg != 0
            seg[nz] = alog2[log[seg[nz]].astype(_I32) + (q1 - int(log[pv]))]
        rows = np.flatnonzero(nzcol & ~row_used)
        if rows.size:
            prow = M[r, col:]
            pnz = np.flatnonzero(prow)
            lgp = log[prow[pnz]].astype(_I32)
            lgf = log[M[rows, col]].astype(_I32)
            M[np.ix_(rows, col + pnz)] ^= alog2[lgf[:, None] + lgp[None, :]]
        pivot_cols.append(col)
    if free_col < 0:
        return None
    x = np.zeros(ncols, dtype=np.uint16)
    x[free_col] = 1
    for col in reversed(pivot_cols):
        r = pivot_row_of[col]
        seg = M[r, col + 1 : free_col + 1]
        xseg = x[col + 1 : free_col + 1]
        nz = (seg != 0) & (xseg != 0)
        if nz.any():
            prods = alog2[log[seg[nz]].astype(_I32) + log[xseg[nz]].astype(_I32)]
            x[col] = np.bitwise_xor.reduce(prods)
    return x


def _strip_x_power(Q):
    """Divide Q (rows = y-degree, cols = x-degree) by its x-content."""
    colnz = np.flatnonzero(Q.any(axis=0))
    v = int(colnz[0])
    if v:
        Q = np.ascontiguousarray(Q[:, v:])
    return Q


def _poly_y_roots(log, alog2, p0):
    """All gamma in the field with p0(gamma) = 0; p0 dense low to high."""
    q = _q(log)
    gammas = np.arange(q, dtype=np.uint16)
    vals = eval_poly_many(log, alog2, p0, gammas)
    return np.flatnonzero(vals == 0).astype(np.uint16)


def _rr_shift_sub(log, alog2, Q, gamma):
    """Return Q(x, x*y + gamma), rows = y-degree."""
    q1 = _q(log) - 1
    ly, w = Q.shape
    out = np.zeros((ly, w + ly), dtype=np.uint16)
    lgamma = int(log[gamma]) if gamma else 0
    for b in range(ly):
        acc = np.zeros(w, dtype=np.uint16)
        for j in range(b, ly):
            if (j & b) != b:
                continue
            row = Q[j]
            if gamma == 0:
                if j == b:
                    acc ^= row
                continue
            e = j - b
            lg = (lgamma * e) % q1
            nz = np.flatnonzero(row)
            if nz.size:
                term = np.zeros(w, dtype=np.uint16)
                term[nz] = alog2[log[row[nz]].astype(_I32) + lg]
                acc ^= term
        out[b, b : b + w] = acc
    return out


def rr_roots(log, alog2, qcoefs, k, _cap=200000):
    """y-roots of a bivariate polynomial: all f with deg f < k, Q(x, f(x)) = 0.

    qcoefs: uint16[(y-degree + 1), (x-degree + 1)].  Shift-substitute
    recursion on y -> x*y + gamma, one level per coefficient of f.
    Candidates come back in depth-first, increasing-gamma order; callers
    re-verify them (spurious leaves are possible and expected).
    """
    out = []
    prefix = np.zeros(k, dtype=np.uint16)
    visits = [0]

    def rec(Q, depth):
        visits[0] += 1
        if visits[0] > _cap:
            raise AssertionError("root search exceeded its node budget")
        if not Q.any():
            return
        Q = _strip_x_power(Q)
        for gamma in _poly_y_roots(log, alog2, Q[:, 0]):
            prefix[depth] = gamma
            if depth == k - 1:
                out.append(prefix.copy())
            else:
                rec(_rr_shift_sub(log, alog2, Q, int(gamma)), depth + 1)
        prefix[depth] = 0

    rec(np.asarray(qcoefs, dtype=np.uint16), 0)
    return out


def vandermonde(log, alog2, xs, ncols):
    """Matrix V[p, j] = xs[p]^j, uint16."""
    q1 = _q(log) - 1
    xs = np.asarray(xs, dtype=np.uint16)
    js = np.arange(ncols, dtype=np.int64)
    lg = (log[xs].astype(np.int64)[:, None] * js[None, :]) % q1
    V = alog2[lg].astype(np.uint16)
    V[xs == 0, 1:] = 0
    return V


def mul_vec(log, alog2, a, b):
    """Elementwise field product of two uint16 arrays."""
    a = np.asarray(a, dtype=np.uint16)
    b = np.asarray(b, dtype=np.uint16)
    out = np.zeros(len(a), dtype=np.uint16)
    nz = (a != 0) & (b != 0)
    if nz.any():
        out[nz] = alog2[log[a[nz]].astype(_I32) + log[b[nz]].astype(_I32)]
    return out
