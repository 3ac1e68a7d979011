"""Theorem-level checks on h*-vectors and facet lattice distances."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .enumeration import interior_lattice_points
from .errors import EmptyList, NoInteriorPoints, NotAFacet, NotUnimodal, TheoremViolation
from .lattice_core import Constraint, bellman_ford, dilate
from .polytopes import AlcovedPolytope, validate


@dataclass(frozen=True)
class UnimodalityReport:
    unimodal: bool
    peak_indices: tuple[int, ...]
    first_violation: int | None = None


@dataclass(frozen=True)
class DistanceReport:
    per_facet: tuple[tuple[Constraint, int | None], ...]
    max_distance: int | None


@dataclass(frozen=True)
class HibiStanleyReport:
    ok: bool
    violations: tuple[tuple[str, int], ...] = ()


@dataclass(frozen=True)
class PeakReport:
    peak_indices: tuple[int, ...]
    lower_middle: int
    upper_middle: int
    at_lower_middle: bool
    at_upper_middle: bool

    @property
    def at_middle(self) -> bool:
        return self.at_lower_middle or self.at_upper_middle


def is_unimodal(v: Sequence[int]) -> UnimodalityReport:
    """No strict increase after the first strict decrease."""
    v = list(v)
    if not v:
        raise EmptyList("unimodality of an empty sequence is undefined")
    top = max(v)
    peaks = tuple(i for i, x in enumerate(v) if x == top)
    decr = next((i for i in range(1, len(v)) if v[i] < v[i - 1]), None)
    if decr is not None:
        for i in range(decr + 1, len(v)):
            if v[i] > v[i - 1]:
                return UnimodalityReport(False, peaks, i)
    return UnimodalityReport(True, peaks, None)


def is_facet(P: AlcovedPolytope, c: Constraint) -> bool:
    """Whether ``c`` is irredundant.

    Without ``c`` the largest value of ``x_i - x_j`` is the shortest path
    ``j -> i`` in the remaining constraint graph; ``c`` defines a facet iff
    that value exceeds its bound (or is unbounded).  A tie means ``c`` is
    implied by a path of two or more constraints, whose common face has
    codimension at least two in a full-dimensional polytope.
    """
    edges = [(o.j, o.i, o.bound) for o in P.constraints if o != c]
    dist = bellman_ford(P.dim + 1, edges, c.j)
    return dist[c.i] is None or dist[c.i] > c.bound


def facets(P: AlcovedPolytope) -> list[Constraint]:
    return [c for c in P.constraints if is_facet(P, c)]


def facet_distance(P: AlcovedPolytope, c: Constraint, interior=None) -> int:
    """Lattice distance from the facet ``c`` to the interior lattice points.

    Alcove normals are primitive, so the distance to ``p`` is just the slack
    ``bound - (p_i - p_j)``.
    """
    if not is_facet(P, c):
        raise NotAFacet(f"{c.describe()} is redundant")
    if interior is None:
        interior = interior_lattice_points(P)
    if not interior:
        raise NoInteriorPoints("polytope has no interior lattice points")
    return min(c.slack(p) for p in interior)


def max_facet_distance(P: AlcovedPolytope, interior=None) -> DistanceReport:
    """Distances of all facets; the maximum must not exceed ``dim - 1``.

    For ``d = 1`` every facet is at distance at least 1, so the bound used is
    ``max(1, d - 1)``.
    """
    if interior is None:
        interior = interior_lattice_points(P)
    if not interior:
        raise NoInteriorPoints("polytope has no interior lattice points")
    per = tuple((c, min(c.slack(p) for p in interior)) for c in facets(P))
    top = max(dist for _, dist in per)
    bound = max(1, P.dim - 1)
    if top > bound:
        raise TheoremViolation(
            f"facet at lattice distance {top} > {bound} in dimension {P.dim}",
            {"hrep": P.hrep.triples(), "max_distance": top},
        )
    return DistanceReport(per, top)


def distance_report(P: AlcovedPolytope, interior=None) -> DistanceReport:
    """Like :func:`max_facet_distance` but ``max_distance`` is None without interior points."""
    if interior is None:
        interior = interior_lattice_points(P)
    if not interior:
        return DistanceReport(tuple((c, None) for c in facets(P)), None)
    return max_facet_distance(P, interior)


def main_theorem_hypothesis(P: AlcovedPolytope, interior=None) -> bool:
    """Interior lattice points exist and every facet is at distance 1 from them."""
    if interior is None:
        interior = interior_lattice_points(P)
    if not interior:
        return False
    return all(min(c.slack(p) for p in interior) == 1 for c in facets(P))


def is_reflexive(P: AlcovedPolytope, interior=None) -> bool:
    """Unique interior lattice point, every facet at distance 1 from it."""
    if interior is None:
        interior = interior_lattice_points(P)
    if len(interior) != 1:
        return False
    (p,) = interior
    return all(c.slack(p) == 1 for c in facets(P))


def gorenstein_index(P: AlcovedPolytope, k_max: int) -> int | None:
    """Smallest ``k <= k_max`` such that ``kP`` is reflexive up to translation."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    for k in range(1, k_max + 1):
        if is_reflexive(validate(dilate(P.hrep, k))):
            return k
    return None


def hstar_symmetry(v: Sequence[int]) -> bool:
    v = list(v)
    return v == v[::-1]


def symmetry_status(reflexive: bool, symmetric: bool) -> str:
    """Compare reflexivity with h*-symmetry.

    Only translations are tried when testing reflexivity, so a symmetric
    vector without a detected reflexive translate is ``"inconclusive"``.
    """
    if reflexive and not symmetric:
        return "violation"
    if symmetric and not reflexive:
        return "inconclusive"
    return "consistent"


def hibi_stanley_check(v: Sequence[int], d: int) -> HibiStanleyReport:
    """Inequalities satisfied by every lattice polytope with a regular unimodular triangulation.

    * ``h*_i >= h*_{d+1-i}`` for ``1 <= i <= floor((d+1)/2)``
    * ``h*_{floor((d+1)/2)} >= ... >= h*_d``
    * ``h*_i <= C(h*_1 + i - 1, i)`` for ``0 <= i <= d``
    """
    h = list(v) + [0] * (d + 2 - len(v))
    bad = []
    half = (d + 1) // 2
    for i in range(1, half + 1):
        if h[i] < h[d + 1 - i]:
            bad.append(("symmetric", i))
    for i in range(half, d):
        if h[i] < h[i + 1]:
            bad.append(("tail", i + 1))
    for i in range(0, d + 1):
        if h[i] > (comb(h[1] + i - 1, i) if i else 1):
            bad.append(("binomial", i))
    return HibiStanleyReport(not bad, tuple(bad))


def peak_location(v: Sequence[int], d: int) -> PeakReport:
    """Where a unimodal h*-vector peaks relative to ``ceil((d-1)/2)`` and ``ceil((d+1)/2)``."""
    rep = is_unimodal(v)
    if not rep.unimodal:
        raise NotUnimodal(f"sequence {list(v)} is not unimodal")
    lower = -(-(d - 1) // 2)
    upper = -(-(d + 1) // 2)
    return PeakReport(
        rep.peak_indices,
        lower,
        upper,
        lower in rep.peak_indices,
        upper in rep.peak_indices,
    )


__all__ = [
    "DistanceReport",
    "HibiStanleyReport",
    "PeakReport",
    "UnimodalityReport",
    "distance_report",
    "facet_distance",
    "facets",
    "gorenstein_index",
    "hibi_stanley_check",
    "hstar_symmetry",
    "is_facet",
    "is_reflexive",
    "is_unimodal",
    "main_theorem_hypothesis",
    "max_facet_distance",
    "peak_location",
    "symmetry_status",
]
