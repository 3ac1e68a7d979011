"""Ehrhart polynomials by exact interpolation and their h*-vectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .enumeration import DEFAULT_BUDGET, count_dilate, count_interior
from .errors import NotLatticeEhrhart, TheoremViolation
from .polytopes import AlcovedPolytope


@dataclass(frozen=True)
class Polynomial:
    """Rational polynomial, ``coeffs[k]`` multiplies ``t**k``; no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "Polynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms) if terms else "0"


def _pmul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def interpolate(nodes: Sequence[int], values: Sequence[int]) -> Polynomial:
    """The unique polynomial of degree < len(nodes) through the given values."""
    total = [Fraction(0)] * len(nodes)
    for a, (xa, ya) in enumerate(zip(nodes, values)):
        basis = [Fraction(1)]
        denom = 1
        for b, xb in enumerate(nodes):
            if b != a:
                basis = _pmul(basis, [-xb, 1])
                denom *= xa - xb
        for k, c in enumerate(basis):
            total[k] += Fraction(ya, 1) * c / denom
    return Polynomial.from_coeffs(total)


def ehrhart_polynomial(
    P: AlcovedPolytope,
    budget: int = DEFAULT_BUDGET,
    nodes: Sequence[int] | None = None,
) -> Polynomial:
    """Interpolate ``L_P`` through ``t = 0..d`` (or the given ``d+1`` nodes)."""
    d = P.dim
    if nodes is None:
        nodes = range(d + 1)
    nodes = list(nodes)
    if len(nodes) != d + 1:
        raise ValueError(f"need {d + 1} interpolation nodes, got {len(nodes)}")
    values = [count_dilate(P, t, budget) for t in nodes]
    return interpolate(nodes, values)


def eulerian_numbers(n: int) -> list[list[int]]:
    """Table ``A[j][k]`` for ``0 <= j, k <= n`` with ``sum_m m^j z^m = sum_k A[j][k] z^k / (1-z)^(j+1)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    A = [[0] * (n + 1) for _ in range(n + 1)]
    A[0][0] = 1
    for j in range(1, n + 1):
        for k in range(1, j + 1):
            A[j][k] = (j - k + 1) * A[j - 1][k - 1] + (k * A[j - 1][k] if k < j else 0)
    return A


def ehr_to_hstar(ehr: Polynomial | Sequence, d: int) -> tuple[int, ...]:
    """h*-vector ``(h*_0, ..., h*_d)`` of a lattice d-polytope from its Ehrhart polynomial.

    Raises :class:`NotLatticeEhrhart` unless every entry is a nonnegative
    integer and ``h*_0 = 1``.
    """
    if not isinstance(ehr, Polynomial):
        ehr = Polynomial.from_coeffs(ehr)
    c = list(ehr.coeffs)
    if len(c) > d + 1:
        raise NotLatticeEhrhart(f"degree {ehr.degree} exceeds dimension {d}")
    A = eulerian_numbers(d)
    total = [Fraction(0)] * (d + 1)
    for i, ci in enumerate(c):
        if ci == 0:
            continue
        term = list(A[i][: i + 1])
        for _ in range(d - i):
            term = _pmul(term, [1, -1])
        for k, v in enumerate(term):
            total[k] += ci * v
    for k, v in enumerate(total):
        if v.denominator != 1 or v < 0:
            raise NotLatticeEhrhart(f"h*_{k} = {v} is not a nonnegative integer")
    if total[0] != 1:
        raise NotLatticeEhrhart(f"h*_0 = {total[0]}, expected 1")
    return tuple(int(v) for v in total)


def ehrhart_from_hstar(h: Sequence[int], d: int) -> Polynomial:
    """``L(t) = sum_i h*_i * C(t - i + d, d)``, the inverse of :func:`ehr_to_hstar`."""
    total = [Fraction(0)] * (d + 1)
    fact = 1
    for m in range(1, d + 1):
        fact *= m
    for i, hi in enumerate(h):
        if hi == 0:
            continue
        # C(t - i + d, d) = prod_{m=1..d} (t - i + m) / d!
        poly = [Fraction(1)]
        for m in range(1, d + 1):
            poly = _pmul(poly, [m - i, 1])
        for k, v in enumerate(poly):
            total[k] += hi * v / fact
    return Polynomial.from_coeffs(total)


def hstar(P: AlcovedPolytope, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """h*-vector of ``P``, cross-checked against direct point counts.

    ``h*_1`` must equal ``|P cap Z^d| - (d+1)`` and ``h*_d`` the number of
    interior lattice points; a mismatch is a :class:`TheoremViolation`.
    """
    d = P.dim
    poly = ehrhart_polynomial(P, budget)
    h = ehr_to_hstar(poly, d)
    n_points = count_dilate(P, 1, budget)
    n_interior = count_interior(P, 1, budget)
    if h[1] != n_points - (d + 1):
        raise TheoremViolation(
            f"h*_1 = {h[1]} but |P cap Z^d| - (d+1) = {n_points - d - 1}",
            {"hrep": P.hrep.triples(), "hstar": list(h)},
        )
    if h[d] != n_interior:
        raise TheoremViolation(
            f"h*_d = {h[d]} but P has {n_interior} interior lattice points",
            {"hrep": P.hrep.triples(), "hstar": list(h)},
        )
    return h
