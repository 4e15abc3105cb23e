# cython: language_level=3
"""Compiled kernels; semantics match _pyref exactly, entry for entry."""

import numpy as np

cimport numpy as cnp

cnp.import_array()

ctypedef cnp.uint16_t u16
ctypedef cnp.int64_t i64


def eval_poly_many(u16[:] log, u16[:] alog2, coeffs, xs):
    cdef cnp.ndarray[u16, ndim=1] cf = np.ascontiguousarray(coeffs, dtype=np.uint16)
    cdef cnp.ndarray[u16, ndim=1] xa = np.ascontiguousarray(xs, dtype=np.uint16)
    cdef u16[:] c = cf
    cdef u16[:] x = xa
    cdef int nc = c.shape[0]
    cdef int n = x.shape[0]
    out_arr = np.zeros(n, dtype=np.uint16)
    cdef u16[:] out = out_arr
    cdef int p, j, acc, xv, lx
    for p in range(n):
        xv = x[p]
        if xv == 0:
            out[p] = c[0] if nc > 0 else 0
            continue
        lx = log[xv]
        acc = 0
        for j in range(nc - 1, -1, -1):
            if acc != 0:
                acc = alog2[log[acc] + lx]
            acc ^= c[j]
        out[p] = acc
    return out_arr


def dd_reduce_values(u16[:] log, u16[:] alog2, u16[:] alphas, u16[:] vals, int delta):
    cdef int q1 = log.shape[0] - 1
    cdef int n = vals.shape[0]
    cdef int s, i, diff, den
    for s in range(delta):
        for i in range(s + 1, n):
            diff = vals[i] ^ vals[s]
            if diff == 0:
                vals[i] = 0
            else:
                den = alphas[i] ^ alphas[s]
                vals[i] = alog2[log[diff] + q1 - log[den]]
    return np.asarray(vals)


def gs_matrix(u16[:] log, u16[:] alog2, u16[:] xs, u16[:] ys, int s, i64[:] mi, i64[:] mj):
    cdef int q1 = log.shape[0] - 1
    cdef int n = xs.shape[0]
    cdef int ncols = mi.shape[0]
    M_arr = np.zeros((n * (s * (s + 1) // 2), ncols), dtype=np.uint16)
    cdef u16[:, :] M = M_arr
    cdef int row = 0
    cdef int p, a, b, col, x, y, lgx, lgy
    cdef i64 i, j, e1, e2, lg
    for p in range(n):
        x = xs[p]
        y = ys[p]
        lgx = log[x] if x else 0
        lgy = log[y] if y else 0
        for a in range(s):
            for b in range(s - a):
                for col in range(ncols):
                    i = mi[col]
                    j = mj[col]
                    if (i & a) != a or (j & b) != b:
                        continue
                    e1 = i - a
                    e2 = j - b
                    if (x == 0 and e1 != 0) or (y == 0 and e2 != 0):
                        continue
                    lg = (lgx * e1 + lgy * e2) % q1
                    M[row, col] = alog2[lg]
                row += 1
    return M_arr


def nullspace_vector(u16[:] log, u16[:] alog2, cnp.ndarray[u16, ndim=2] M_arr):
    cdef u16[:, :] M = M_arr
    cdef int nrows = M.shape[0]
    cdef int ncols = M.shape[1]
    cdef int q1 = log.shape[0] - 1
    used_arr = np.zeros(nrows, dtype=np.uint8)
    cdef cnp.uint8_t[:] used = used_arr
    prow_arr = np.full(ncols, -1, dtype=np.int64)
    cdef i64[:] pivot_row_of = prow_arr
    pcols_arr = np.empty(ncols, dtype=np.int64)
    cdef i64[:] pcols = pcols_arr
    cdef int npiv = 0, free_col = -1
    cdef int col, r, rr, j, pv, linv, lf
    for col in range(ncols):
        r = -1
        for rr in range(nrows):
            if used[rr] == 0 and M[rr, col] != 0:
                r = rr
                break
        if r < 0:
            free_col = col
            break
        used[r] = 1
        pivot_row_of[col] = r
        pcols[npiv] = col
        npiv += 1
        pv = M[r, col]
        if pv != 1:
            linv = q1 - log[pv]
            for j in range(col, ncols):
                if M[r, j] != 0:
                    M[r, j] = alog2[log[M[r, j]] + linv]
        for rr in range(nrows):
            if used[rr] != 0 or M[rr, col] == 0:
                continue
            lf = log[M[rr, col]]
            for j in range(col, ncols):
                if M[r, j] != 0:
                    M[rr, j] ^= alog2[log[M[r, j]] + lf]
    if free_col < 0:
        return None
    x_arr = np.zeros(ncols, dtype=np.uint16)
    cdef u16[:] x = x_arr
    x[free_col] = 1
    cdef int ci, acc, v
    for ci in range(npiv - 1, -1, -1):
        col = pcols[ci]
        r = pivot_row_of[col]
        acc = 0
        for j in range(col + 1, free_col + 1):
            v = M[r, j]
            if v != 0 and x[j] != 0:
                acc ^= alog2[log[v] + log[x[j]]]
        x[col] = acc
    return x_arr


cdef _strip_x_power(u16[:, :] Q):
    cdef int ly = Q.shape[0]
    cdef int w = Q.shape[1]
    cdef int v, jrow, t
    cdef bint found = False
    v = 0
    for t in range(w):
        for jrow in range(ly):
            if Q[jrow, t] != 0:
                found = True
                break
        if found:
            v = t
            break
    return np.ascontiguousarray(Q[:, v:])


cdef _poly_y_roots(u16[:] log, u16[:] alog2, u16[:, :] Q):
    cdef int q = log.shape[0]
    cdef int ly = Q.shape[0]
    cdef int g, j, acc, lg
    roots = []
    for g in range(q):
        acc = 0
        if g == 0:
            acc = Q[0, 0]
        else:
            lg = log[g]
            for j in range(ly - 1, -1, -1):
                if acc != 0:
                    acc = alog2[log[acc] + lg]
                acc ^= Q[j, 0]
        if acc == 0:
            roots.append(g)
    return roots


cdef _rr_shift_sub(u16[:] log, u16[:] alog2, u16[:, :] Q, int gamma):
    cdef int q1 = log.shape[0] - 1
    cdef int ly = Q.shape[0]
    cdef int w = Q.shape[1]
    out_arr = np.zeros((ly, w + ly), dtype=np.uint16)
    cdef u16[:, :] o = out_arr
    cdef int b, j, t, lgam, lg
    cdef i64 e
    lgam = log[gamma] if gamma else 0
    for b in range(ly):
        for j in range(b, ly):
            if (j & b) != b:
                continue
            if gamma == 0:
                if j != b:
                    continue
                for t in range(w):
                    o[b, b + t] ^= Q[j, t]
            else:
                e = j - b
                lg = (lgam * e) % q1
                for t in range(w):
                    if Q[j, t] != 0:
                        o[b, b + t] ^= alog2[log[Q[j, t]] + lg]
    return out_arr


cdef _rr_rec(u16[:] log, u16[:] alog2, Q_obj, int depth, int k, prefix_arr, out, budget):
    budget[0] -= 1
    if budget[0] < 0:
        raise AssertionError("root search exceeded its node budget")
    if not Q_obj.any():
        return
    cdef u16[:, :] Q = Q_obj
    stripped = _strip_x_power(Q)
    cdef u16[:] prefix = prefix_arr
    cdef int gamma
    for gamma in _poly_y_roots(log, alog2, stripped):
        prefix[depth] = gamma
        if depth == k - 1:
            out.append(prefix_arr.copy())
        else:
            _rr_rec(log, alog2, _rr_shift_sub(log, alog2, stripped, gamma),
                    depth + 1, k, prefix_arr, out, budget)
    prefix[depth] = 0


def rr_roots(u16[:] log, u16[:] alog2, qcoefs, int k, int _cap=200000):
    out = []
    prefix_arr = np.zeros(k, dtype=np.uint16)
    _rr_rec(log, alog2, np.ascontiguousarray(qcoefs, dtype=np.uint16),
            0, k, prefix_arr, out, [_cap])
    return out
