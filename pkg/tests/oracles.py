"""Independent brute-force references used only by the tests.

Nothing here touches shortest paths or the compiled kernels: points come
from scanning a box coordinate by coordinate and testing every constraint.
"""

from itertools import combinations, product
from math import comb


def box_for(triples, dim, t=1):
    """A box guaranteed to contain ``t*P`` when ``P`` has explicit coordinate bounds."""
    hi = max((abs(k) for _, _, k in triples), default=0) * dim * max(t, 1) + 1
    return range(-hi, hi + 1)


def satisfies(triples, x, t=1, strict=False):
    for i, j, k in triples:
        xi = x[i - 1] if i else 0
        xj = x[j - 1] if j else 0
        if strict and not xi - xj < t * k:
            return False
        if not strict and not xi - xj <= t * k:
            return False
    return True


def box_scan(triples, dim, t=1, strict=False, box=None):
    box = box or box_for(triples, dim, t)
    return sorted(x for x in product(box, repeat=dim) if satisfies(triples, x, t, strict))


def facet_by_enumeration(triples, dim, c):
    """Drop ``c`` and look for a new lattice point in some dilate ``t <= dim + 1``."""
    rest = [o for o in triples if tuple(o) != tuple(c)]
    for t in range(1, dim + 2):
        box = box_for(triples, dim, t)
        for x in product(box, repeat=dim):
            if satisfies(rest, x, t) and not satisfies([c], x, t):
                return True
    return False


def h_from_f_by_polynomial(f):
    """``sum_k h_k x^(d+1-k) = sum_i f_(i-1) (x-1)^(d+1-i)`` expanded directly."""
    d = len(f) - 2
    n = d + 1
    coeff = [0] * (n + 1)  # coefficient of x^m
    for i, fi in enumerate(f):
        e = n - i
        for m in range(e + 1):
            coeff[m] += fi * comb(e, m) * (-1) ** (e - m)
    return tuple(coeff[n - k] for k in range(n + 1))


def unimodal_by_quantifiers(v):
    """No ``i < j < k`` with ``v[i] > v[j] < v[k]``."""
    return not any(
        v[i] > v[j] < v[k] for i, j, k in combinations(range(len(v)), 3)
    )
