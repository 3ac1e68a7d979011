"""Alcove triangulations, the boundary-compatible triangulation, f- and h-vectors."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import _backend
from ._kernels_py import _det
from .analysis import facets
from .enumeration import DEFAULT_BUDGET, lattice_points
from .errors import (
    AlcovedError,
    CandidateBudgetExceeded,
    DegenerateSimplex,
    EnumerationBudgetExceeded,
    HypothesisViolated,
    NoInteriorPoints,
)
from .lattice_core import Constraint, canonicalize
from .polytopes import AlcovedPolytope, validate

Simplex = tuple  # sorted tuple of lattice points


@dataclass(frozen=True)
class Triangulation:
    dim: int
    maximal_simplices: tuple[Simplex, ...]
    vertex_set: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.maximal_simplices)


@dataclass(frozen=True)
class BoundaryComplex:
    """Faces of a triangulation spanned by boundary lattice points.

    ``simplices`` are the (d-1)-faces inside some facet; ``extraneous``
    lists induced faces whose vertices are on the boundary but which cut
    through the interior.  ``per_facet`` maps each facet to
    ``(covered volume, facet volume)`` in normalized (d-1)-volume.
    """

    simplices: frozenset
    extraneous: tuple[Simplex, ...]
    per_facet: tuple[tuple[Constraint, int, int], ...]

    @property
    def covers(self) -> bool:
        return all(got == want for _, got, want in self.per_facet)

    @property
    def is_boundary_triangulation(self) -> bool:
        return self.covers and not self.extraneous


def simplex_det(vertices: Sequence[Sequence[int]]) -> int:
    v0 = vertices[0]
    return _det([[v[c] - v0[c] for c in range(len(v0))] for v in vertices[1:]])


def is_unimodular(S: Sequence[Sequence[int]]) -> bool:
    """Whether the edge vectors at a vertex form a lattice basis."""
    det = simplex_det(S)
    if det == 0:
        raise DegenerateSimplex(f"simplex {tuple(S)} is degenerate")
    return abs(det) == 1


def alcove_triangulation(P: AlcovedPolytope, budget: int = DEFAULT_BUDGET) -> Triangulation:
    """Subdivision of ``P`` by every alcove hyperplane.

    Cells are ``conv(b, b + e_s1, b + e_s1 + e_s2, ..., b + (1,...,1))`` for
    a lattice point ``b`` and a permutation ``s``; a cell belongs to ``P``
    exactly when all of its vertices are lattice points of ``P``.  Paths are
    grown one unit step at a time and abandoned at the first vertex outside.
    """
    d = P.dim
    pts = lattice_points(P, budget).points
    inside = set(pts)
    cells = []
    for b in pts:
        stack = [(b, 0, (b,))]
        while stack:
            v, used, path = stack.pop()
            if used == (1 << d) - 1:
                cells.append(tuple(sorted(path)))
                if len(cells) > budget:
                    raise EnumerationBudgetExceeded(budget, "alcoves")
                continue
            for c in range(d):
                if used >> c & 1:
                    continue
                w = v[:c] + (v[c] + 1,) + v[c + 1:]
                if w in inside:
                    stack.append((w, used | 1 << c, path + (w,)))
    cells.sort()
    verts = sorted({v for cell in cells for v in cell})
    return Triangulation(d, tuple(cells), tuple(verts))


def faces(T: Triangulation) -> list[set]:
    """``out[k]`` is the set of k-dimensional faces (sorted vertex tuples)."""
    out: list[set] = [set() for _ in range(T.dim + 1)]
    for cell in T.maximal_simplices:
        for k in range(1, len(cell) + 1):
            out[k - 1].update(combinations(cell, k))
    return out


def f_vector(T: Triangulation) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_d)`` with ``f_{-1} = 1``."""
    return (1,) + tuple(len(s) for s in faces(T))


def h_vector(f: Sequence[int]) -> tuple[int, ...]:
    """``h_k = sum_{i<=k} (-1)^(k-i) C(d+1-i, k-i) f_{i-1}`` for ``k = 0..d+1``."""
    d = len(f) - 2
    return tuple(
        sum((-1) ** (k - i) * comb(d + 1 - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 2)
    )


def lift_height(x: Sequence[int]) -> int:
    """``sum x_i^2 + sum_{i<j} (x_i - x_j)^2``; induces the alcove triangulation."""
    return sum(c * c for c in x) + sum((a - b) ** 2 for a, b in combinations(x, 2))


def check_hypothesis(P: AlcovedPolytope, interior=None) -> None:
    """Raise unless every facet is at lattice distance 1 from the interior points."""
    if interior is None:
        interior = lattice_points(P).interior
    if not interior:
        raise NoInteriorPoints("polytope has no interior lattice points")
    worst = None
    for c in facets(P):
        dist = min(c.slack(p) for p in interior)
        if dist >= 2 and (worst is None or dist > worst[1]):
            worst = (c, dist)
    if worst is not None:
        raise HypothesisViolated(*worst)


def _pushed_above(points, S, p) -> bool:
    """Whether ``p`` ends above the lifted simplex ``S`` under the pushing order.

    Point ``q`` is lifted by ``eps**(q+1)``.  The smallest index in
    ``S + (p,)`` that moves the comparison decides it: lifting ``p`` itself
    puts it above, lifting a vertex ``q`` of ``S`` raises the hyperplane over
    ``p`` by ``lambda_q(p)`` times the lift, where ``lambda`` are the
    barycentric coordinates of ``p`` in ``S``.
    """
    base = simplex_det([points[s] for s in S])
    for q in sorted(S + (p,)):
        if q == p:
            return True
        swapped = [points[p] if s == q else points[s] for s in S]
        lam = simplex_det(swapped)
        if lam:
            return (lam > 0) != (base > 0)
    raise AssertionError("point coincides with a vertex")


def boundary_compatible_triangulation(
    P: AlcovedPolytope,
    budget: int = DEFAULT_BUDGET,
    force_python: bool = False,
) -> Triangulation:
    """Regular unimodular triangulation whose boundary is triangulated by its own faces.

    Heights are compared lexicographically: first ``b`` (0 on interior, 1 on
    boundary lattice points), then ``a`` = :func:`lift_height`, standing in
    for ``b + eps * a``.  The pair is not always generic; cells of the pair
    subdivision with several lattice points on one lifted hyperplane are
    split by pushing the points in sorted order.  Cells are found by
    testing every ``(d+1)``-subset of lattice points against the lower hull,
    and the result is checked for unimodularity and total volume.
    """
    d = P.dim
    ps = lattice_points(P, budget)
    check_hypothesis(P, ps.interior)
    A = list(ps.points)
    n_cand = comb(len(A), d + 1)
    if n_cand > budget:
        raise CandidateBudgetExceeded(n_cand, budget)
    heights = [[0 if m else 1 for m in ps.interior_mask], [lift_height(p) for p in A]]
    kernel = _backend.cells_kernel(A, heights, d, force_python)
    idx_cells, ties = kernel.regular_cells(A, heights, d)
    for S, on in ties:
        if all(_pushed_above(A, S, p) for p in on):
            idx_cells.append(S)
    cells = sorted(tuple(A[i] for i in S) for S in idx_cells)
    bad = [c for c in cells if abs(simplex_det(c)) != 1]
    if bad:
        raise AlcovedError(f"{len(bad)} cells are not unimodular, e.g. {bad[0]}")
    volume = len(cells)
    expected = len(alcove_triangulation(P, budget))
    if volume != expected:
        raise AlcovedError(
            f"lower hull cells have normalized volume {volume}, polytope has {expected}"
        )
    verts = sorted({v for cell in cells for v in cell})
    return Triangulation(d, tuple(cells), tuple(verts))


def _facet_chart(c: Constraint):
    """Eliminated coordinate ``e`` and ``(f, off)`` with ``x_e = x_f + off`` on the facet."""
    if c.i != 0:
        return c.i, c.j, c.bound
    return c.j, 0, -c.bound


def facet_polytope(P: AlcovedPolytope, c: Constraint):
    """The facet ``c`` as a (d-1)-dimensional alcoved polytope with lift and projection maps.

    One coordinate is eliminated through the facet equation; the
    substitution maps alcove hyperplanes to alcove hyperplanes and the
    facet's lattice onto ``Z^(d-1)``.
    """
    d = P.dim
    e, f, off = _facet_chart(c)
    keep = [k for k in range(1, d + 1) if k != e]
    renum = {0: 0, **{old: new for new, old in enumerate(keep, start=1)}}
    cons = []
    for o in P.constraints:
        i, j, k = o.i, o.j, o.bound
        if i == e:
            i, k = f, k - off
        if j == e:
            j, k = f, k + off
        if i == j:
            continue
        cons.append((renum[i], renum[j], k))
    Fp = validate(canonicalize(cons, d - 1))

    def lift(q: Sequence[int]) -> tuple[int, ...]:
        x = dict(zip(keep, q))
        x[0] = 0
        x[e] = x[f] + off
        return tuple(x[k] for k in range(1, d + 1))

    def project(x: Sequence[int]) -> tuple[int, ...]:
        return tuple(x[k - 1] for k in keep)

    return Fp, lift, project


def facet_alcove_triangulation(P: AlcovedPolytope, c: Constraint) -> frozenset:
    """The alcove triangulation of the facet ``c``, as (d-1)-simplices in ``R^d``."""
    if P.dim == 1:
        e, f, off = _facet_chart(c)
        return frozenset({((off,),)})
    Fp, lift, _ = facet_polytope(P, c)
    return frozenset(
        tuple(sorted(lift(v) for v in cell)) for cell in alcove_triangulation(Fp).maximal_simplices
    )


def _facet_volume(simplex: Iterable, project) -> int:
    pts = [project(v) for v in simplex]
    if len(pts) == 1:
        return 1
    return abs(simplex_det(pts))


def restriction_to_facet(T: Triangulation, c: Constraint, all_faces=None) -> frozenset:
    """The (d-1)-faces of ``T`` lying in the hyperplane of ``c``."""
    if all_faces is None:
        all_faces = faces(T)
    return frozenset(
        s for s in all_faces[T.dim - 1] if all(c.evaluate(v) == c.bound for v in s)
    )


def induced_boundary_complex(T: Triangulation, P: AlcovedPolytope) -> BoundaryComplex:
    d = P.dim
    fs = facets(P)
    all_faces = faces(T)
    on_boundary = {
        v for v in T.vertex_set if any(c.evaluate(v) == c.bound for c in fs)
    }
    in_some_facet = []
    extraneous = []
    for k in range(1, d):
        for s in all_faces[k]:
            if not all(v in on_boundary for v in s):
                continue
            if any(all(c.evaluate(v) == c.bound for v in s) for c in fs):
                if k == d - 1:
                    in_some_facet.append(s)
            else:
                extraneous.append(s)
    if d == 1:
        in_some_facet = [s for s in all_faces[0] if s[0] in on_boundary]
    per_facet = []
    for c in fs:
        mine = [s for s in in_some_facet if all(c.evaluate(v) == c.bound for v in s)]
        if d == 1:
            got, want = len(mine), 1
        else:
            Fp, _, project = facet_polytope(P, c)
            got = sum(_facet_volume(s, project) for s in mine)
            want = len(alcove_triangulation(Fp))
        per_facet.append((c, got, want))
    return BoundaryComplex(frozenset(in_some_facet), tuple(sorted(extraneous)), tuple(per_facet))


__all__ = [
    "BoundaryComplex",
    "Triangulation",
    "alcove_triangulation",
    "boundary_compatible_triangulation",
    "check_hypothesis",
    "f_vector",
    "facet_alcove_triangulation",
    "facet_polytope",
    "faces",
    "h_vector",
    "induced_boundary_complex",
    "is_unimodular",
    "lift_height",
    "restriction_to_facet",
]
