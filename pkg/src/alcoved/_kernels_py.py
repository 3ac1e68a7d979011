"""Pure-Python kernels.  Same signatures and results as the compiled ``_kernels``.

Both kernels work on plain nested lists of ints.  ``D`` is a shortest-path
closure as produced by :func:`alcoved.lattice_core.shortest_path_closure`:
``D[j][i]`` is the maximum of ``x_i - x_j``.
"""

from __future__ import annotations

from itertools import combinations

from .errors import EnumerationBudgetExceeded

NAME = "python"


def _fix(D, n, k, v):
    # Pin x_k = v by adding edges 0 -> k (v) and k -> 0 (-v); only the rows
    # and columns of the still-free coordinates (and node 0) are refreshed.
    Dk = D[k]
    D0 = D[0]
    out = [row[:] for row in D]
    rest = [0] + list(range(k + 1, n))
    for a in rest:
        Da = D[a]
        oa = out[a]
        via0 = Da[0] + v
        viak = Da[k] - v
        for b in rest:
            best = Da[b]
            c = via0 + Dk[b]
            if c < best:
                best = c
            c = viak + D0[b]
            if c < best:
                best = c
            oa[b] = best
    return out


def count_points(D, budget):
    """Return ``(count, nodes)``: lattice points of the system and DFS nodes used.

    The last coordinate contributes its whole interval at once, so ``nodes``
    is roughly ``count`` divided by the typical fibre length.
    """
    n = len(D)
    d = n - 1
    if d == 0:
        return 1, 0
    nodes = 0
    total = 0
    stack = [(D, 1)]
    while stack:
        M, k = stack.pop()
        lo = -M[k][0]
        hi = M[0][k]
        if hi < lo:
            continue
        if k == d:
            total += hi - lo + 1
            continue
        nodes += hi - lo + 1
        if nodes > budget:
            raise EnumerationBudgetExceeded(budget, "search nodes")
        for v in range(hi, lo - 1, -1):
            stack.append((_fix(M, n, k, v), k + 1))
    return total, nodes


def enumerate_points(D, budget):
    """All lattice points of the system, lexicographically sorted."""
    n = len(D)
    d = n - 1
    if d == 0:
        return [()]
    out = []
    stack = [(D, 1, ())]
    while stack:
        M, k, prefix = stack.pop()
        lo = -M[k][0]
        hi = M[0][k]
        if k == d:
            if hi >= lo:
                if len(out) + hi - lo + 1 > budget:
                    raise EnumerationBudgetExceeded(budget)
                out.extend(prefix + (v,) for v in range(lo, hi + 1))
            continue
        for v in range(hi, lo - 1, -1):
            stack.append((_fix(M, n, k, v), k + 1, prefix + (v,)))
    return out


def _det(rows):
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - mik * mk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _cofactors(E, dh):
    """Cofactors of the last row of the (d+1)x(d+1) matrix ``[E | dh ; w]``.

    ``det([E | dh ; w]) = sum_k w[k] * C[k]``, with ``C[d] = det(E)``.
    """
    d = len(E)
    full = [list(E[r]) + [dh[r]] for r in range(d)]
    C = []
    for k in range(d + 1):
        minor = [row[:k] + row[k + 1:] for row in full]
        C.append((-1) ** (d + k) * _det(minor))
    return C


def regular_cells(points, heights, dim):
    """Lower cells of the regular subdivision for lexicographic heights.

    ``heights`` is a list of height vectors compared lexicographically, the
    first dominating.  Brute force: a ``(dim+1)``-subset is a cell iff it is
    affinely independent and every other point lifts lexicographically
    strictly above the lifted subset.  Returns ``(cells, ties)``: ``cells``
    are sorted index tuples; ``ties`` lists ``(subset, on)`` for subsets with
    no point below but the points ``on`` exactly on their lifted hyperplane.
    """
    n = len(points)
    cells = []
    ties = []
    for S in combinations(range(n), dim + 1):
        s0 = points[S[0]]
        E = [[points[s][c] - s0[c] for c in range(dim)] for s in S[1:]]
        detE = _det(E)
        if detE == 0:
            continue
        sgn = 1 if detE > 0 else -1
        Cs = [_cofactors(E, [h[s] - h[S[0]] for s in S[1:]]) for h in heights]
        members = set(S)
        ok = True
        on = []
        for p in range(n):
            if p in members:
                continue
            w = [points[p][c] - s0[c] for c in range(dim)]
            for h, C in zip(heights, Cs):
                delta = sgn * (sum(w[c] * C[c] for c in range(dim)) + (h[p] - h[S[0]]) * C[dim])
                if delta:
                    break
            if delta < 0:
                ok = False
                break
            if delta == 0:
                on.append(p)
        if ok:
            if on:
                ties.append((S, tuple(on)))
            else:
                cells.append(S)
    return cells, ties
