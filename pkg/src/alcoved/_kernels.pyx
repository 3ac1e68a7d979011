# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; int64 mirror of :mod:`alcoved._kernels_py`.

Callers only route systems here whose entries fit comfortably in int64
(see :mod:`alcoved._backend`); everything else stays on the Python path.
"""

import numpy as np
cimport numpy as cnp
from itertools import combinations

from .errors import EnumerationBudgetExceeded

ctypedef long long i64

NAME = "cython"


cdef inline void _fix(i64[:, :, :] mats, int lvl, int n, int k, i64 v) noexcept nogil:
    cdef int a, b
    cdef i64 best, c, via0, viak
    for a in range(n):
        if a != 0 and a <= k:
            continue
        via0 = mats[lvl, a, 0] + v
        viak = mats[lvl, a, k] - v
        for b in range(n):
            if b != 0 and b <= k:
                continue
            best = mats[lvl, a, b]
            c = via0 + mats[lvl, k, b]
            if c < best:
                best = c
            c = viak + mats[lvl, 0, b]
            if c < best:
                best = c
            mats[lvl + 1, a, b] = best


cdef int _count(i64[:, :, :] mats, int n, int k, i64 budget,
                i64* total, i64* nodes) noexcept nogil:
    cdef i64 lo = -mats[k - 1, k, 0]
    cdef i64 hi = mats[k - 1, 0, k]
    cdef i64 v
    if hi < lo:
        return 0
    if k == n - 1:
        total[0] += hi - lo + 1
        return 0
    nodes[0] += hi - lo + 1
    if nodes[0] > budget:
        return 1
    for v in range(lo, hi + 1):
        _fix(mats, k - 1, n, k, v)
        if _count(mats, n, k + 1, budget, total, nodes):
            return 1
    return 0


def count_points(D, budget):
    cdef int n = len(D)
    if n == 1:
        return 1, 0
    cdef cnp.ndarray[i64, ndim=3] buf = np.zeros((n, n, n), dtype=np.int64)
    buf[0] = np.asarray(D, dtype=np.int64)
    cdef i64 total = 0
    cdef i64 nodes = 0
    cdef i64 cap = budget
    cdef int rc
    cdef i64[:, :, :] mats = buf
    with nogil:
        rc = _count(mats, n, 1, cap, &total, &nodes)
    if rc:
        raise EnumerationBudgetExceeded(budget, "search nodes")
    return int(total), int(nodes)


cdef int _enum(i64[:, :, :] mats, int n, int k, i64[:] prefix,
               i64[:, :] out, i64* count, i64 cap) noexcept nogil:
    cdef i64 lo = -mats[k - 1, k, 0]
    cdef i64 hi = mats[k - 1, 0, k]
    cdef i64 v
    cdef int c
    if hi < lo:
        return 0
    if k == n - 1:
        if count[0] + hi - lo + 1 > cap:
            return 1
        for v in range(lo, hi + 1):
            for c in range(n - 2):
                out[count[0], c] = prefix[c]
            out[count[0], n - 2] = v
            count[0] += 1
        return 0
    for v in range(lo, hi + 1):
        prefix[k - 1] = v
        _fix(mats, k - 1, n, k, v)
        if _enum(mats, n, k + 1, prefix, out, count, cap):
            return 1
    return 0


def enumerate_points(D, budget):
    cdef int n = len(D)
    if n == 1:
        return [()]
    total, _ = count_points(D, budget)
    if total > budget:
        raise EnumerationBudgetExceeded(budget)
    cdef cnp.ndarray[i64, ndim=3] buf = np.zeros((n, n, n), dtype=np.int64)
    buf[0] = np.asarray(D, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=2] out = np.zeros((max(total, 1), n - 1), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] prefix = np.zeros(n, dtype=np.int64)
    cdef i64 count = 0
    cdef i64 cap = total
    cdef i64[:, :, :] mats = buf
    cdef i64[:, :] outv = out
    cdef i64[:] pv = prefix
    with nogil:
        _enum(mats, n, 1, pv, outv, &count, cap)
    return [tuple(int(x) for x in row) for row in out[:count].tolist()]


cdef i64 _det(i64* m, int n) noexcept nogil:
    # Bareiss elimination on an n x n row-major scratch matrix (destroyed).
    cdef int i, j, k, r
    cdef i64 sign = 1, prev = 1, pivot, t
    if n == 0:
        return 1
    for k in range(n - 1):
        if m[k * n + k] == 0:
            r = k + 1
            while r < n and m[r * n + k] == 0:
                r += 1
            if r == n:
                return 0
            for j in range(n):
                t = m[k * n + j]
                m[k * n + j] = m[r * n + j]
                m[r * n + j] = t
            sign = -sign
        pivot = m[k * n + k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i * n + j] = (m[i * n + j] * pivot - m[i * n + k] * m[k * n + j]) // prev
        prev = pivot
    return sign * m[n * n - 1]


cdef void _cofactors(i64* E, i64* dh, int d, i64* C, i64* scratch) noexcept nogil:
    cdef int k, r, c, cc
    for k in range(d + 1):
        for r in range(d):
            cc = 0
            for c in range(d + 1):
                if c == k:
                    continue
                if c < d:
                    scratch[r * d + cc] = E[r * d + c]
                else:
                    scratch[r * d + cc] = dh[r]
                cc += 1
        C[k] = _det(scratch, d)
        if (d + k) % 2 == 1:
            C[k] = -C[k]


def regular_cells(points, heights, dim):
    cdef int n = len(points)
    cdef int d = dim
    cdef int m = len(heights)
    cdef cnp.ndarray[i64, ndim=2] P = np.asarray(points, dtype=np.int64).reshape(n, d)
    cdef cnp.ndarray[i64, ndim=2] H = np.asarray(heights, dtype=np.int64).reshape(m, n)
    cdef cnp.ndarray[i64, ndim=1] E = np.zeros(d * d + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] S2 = np.zeros(d * d + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] dh = np.zeros(d + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=2] C = np.zeros((m, d + 1), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] idx = np.zeros(d + 1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] on = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[char, ndim=1] member = np.zeros(n, dtype=np.int8)
    cdef int r, c, p, s0, t, l, n_on
    cdef i64 detE, sgn, delta
    cdef bint ok
    cells = []
    ties = []
    for S in combinations(range(n), d + 1):
        for t in range(d + 1):
            idx[t] = S[t]
        s0 = idx[0]
        for r in range(d):
            for c in range(d):
                E[r * d + c] = P[idx[r + 1], c] - P[s0, c]
                S2[r * d + c] = E[r * d + c]
        detE = _det(&S2[0], d)
        if detE == 0:
            continue
        sgn = 1 if detE > 0 else -1
        for l in range(m):
            for r in range(d):
                dh[r] = H[l, idx[r + 1]] - H[l, s0]
            _cofactors(&E[0], &dh[0], d, &C[l, 0], &S2[0])
        for t in range(d + 1):
            member[idx[t]] = 1
        ok = True
        n_on = 0
        for p in range(n):
            if member[p]:
                continue
            delta = 0
            for l in range(m):
                delta = (H[l, p] - H[l, s0]) * C[l, d]
                for c in range(d):
                    delta += (P[p, c] - P[s0, c]) * C[l, c]
                delta *= sgn
                if delta != 0:
                    break
            if delta < 0:
                ok = False
                break
            if delta == 0:
                on[n_on] = p
                n_on += 1
        for t in range(d + 1):
            member[idx[t]] = 0
        if ok:
            if n_on:
                touched = []
                for t in range(n_on):
                    touched.append(int(on[t]))
                ties.append((S, tuple(touched)))
            else:
                cells.append(S)
    return cells, ties
