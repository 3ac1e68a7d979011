"""Exception types raised across the package."""

from __future__ import annotations


class AlcovedError(Exception):
    """Base class for every error raised by :mod:`alcoved`."""


class IndexOutOfRange(AlcovedError, ValueError):
    pass


class DimensionMismatch(AlcovedError, ValueError):
    pass


class Infeasible(AlcovedError):
    """The constraint system has a negative cycle, so the polyhedron is empty."""


class Unbounded(AlcovedError):
    def __init__(self, coord: int):
        super().__init__(f"polyhedron is unbounded in coordinate x_{coord}")
        self.coord = coord


class NotFullDimensional(AlcovedError):
    pass


class CyclicRelations(AlcovedError, ValueError):
    pass


class EnumerationBudgetExceeded(AlcovedError):
    def __init__(self, budget: int, what: str = "lattice points"):
        super().__init__(f"enumeration passed the budget of {budget} {what}")
        self.budget = budget


class CandidateBudgetExceeded(AlcovedError):
    def __init__(self, candidates: int, budget: int):
        super().__init__(
            f"{candidates} candidate cells exceed the budget of {budget}"
        )
        self.candidates = candidates
        self.budget = budget


class NotLatticeEhrhart(AlcovedError, ValueError):
    """The polynomial does not come from a lattice polytope (h* not in N)."""


class DegenerateSimplex(AlcovedError, ValueError):
    pass


class HypothesisViolated(AlcovedError):
    """A facet sits at lattice distance >= 2 from the interior lattice points."""

    def __init__(self, facet, distance: int | None):
        if distance is None:
            msg = "polytope has no interior lattice points"
        else:
            msg = (
                f"facet {facet.describe()} has lattice distance {distance} "
                "to the interior lattice points; no boundary-compatible "
                "unimodular triangulation exists"
            )
        super().__init__(msg)
        self.facet = facet
        self.distance = distance


class NoInteriorPoints(AlcovedError):
    pass


class NotAFacet(AlcovedError, ValueError):
    pass


class NotUnimodal(AlcovedError, ValueError):
    pass


class EmptyList(AlcovedError, ValueError):
    pass


class TheoremViolation(AlcovedError):
    """A proven statement failed on a concrete instance.

    Either the code is wrong or a counterexample was found; ``instance``
    carries everything needed to reproduce it.
    """

    def __init__(self, message: str, instance: dict | None = None):
        super().__init__(message)
        self.instance = instance or {}
