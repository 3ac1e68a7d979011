"""Lattice points of alcoved polytopes and their dilates."""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend
from .errors import Infeasible
from .lattice_core import HRep, contains, dilate, shift_bounds, shortest_path_closure
from .polytopes import AlcovedPolytope

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple[tuple[int, ...], ...]
    interior_mask: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.points)

    @property
    def interior(self) -> list[tuple[int, ...]]:
        return [p for p, m in zip(self.points, self.interior_mask) if m]

    @property
    def boundary(self) -> list[tuple[int, ...]]:
        return [p for p, m in zip(self.points, self.interior_mask) if not m]


def _hrep(P) -> HRep:
    return P.hrep if isinstance(P, AlcovedPolytope) else P


def _points(h: HRep, budget: int, force_python: bool) -> list[tuple[int, ...]]:
    D = shortest_path_closure(h)
    return _backend.closure_kernel(D, force_python).enumerate_points(D, budget)


def lattice_points(P, budget: int = DEFAULT_BUDGET, force_python: bool = False) -> PointSet:
    """All lattice points, sorted, with their interior flags.

    Coordinates are fixed in ascending order; after each choice the
    remaining intervals are re-tightened by updating the shortest-path
    closure of the constraint graph, so the search never backtracks.
    """
    h = _hrep(P)
    pts = _points(h, budget, force_python)
    mask = tuple(contains(h, p, strict=True) for p in pts)
    return PointSet(h.dim, tuple(pts), mask)


def count_dilate(P, t: int, budget: int = DEFAULT_BUDGET, force_python: bool = False) -> int:
    """``L_P(t)``; ``budget`` caps the search nodes, not the count."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return 1
    h = dilate(_hrep(P), t)
    D = shortest_path_closure(h)
    count, _ = _backend.closure_kernel(D, force_python).count_points(D, budget)
    return count


def interior_lattice_points(P, budget: int = DEFAULT_BUDGET, force_python: bool = False):
    """Lattice points satisfying every constraint strictly.

    With integer data, ``x_i - x_j < k`` is ``x_i - x_j <= k - 1``.
    """
    h = shift_bounds(_hrep(P), -1)
    try:
        return _points(h, budget, force_python)
    except Infeasible:
        return []


def count_interior(P, t: int = 1, budget: int = DEFAULT_BUDGET, force_python: bool = False) -> int:
    h = shift_bounds(dilate(_hrep(P), t), -1)
    try:
        D = shortest_path_closure(h)
    except Infeasible:
        return 0
    count, _ = _backend.closure_kernel(D, force_python).count_points(D, budget)
    return count

