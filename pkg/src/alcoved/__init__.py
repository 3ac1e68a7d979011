"""Exact Ehrhart theory and triangulations for alcoved polytopes of type A."""

from ._backend import active_name as kernel_backend
from .analysis import (
    distance_report,
    facet_distance,
    facets,
    gorenstein_index,
    hibi_stanley_check,
    hstar_symmetry,
    is_facet,
    is_reflexive,
    is_unimodal,
    main_theorem_hypothesis,
    max_facet_distance,
    peak_location,
    symmetry_status,
)
from .ehrhart import (
    Polynomial,
    ehr_to_hstar,
    ehrhart_from_hstar,
    ehrhart_polynomial,
    eulerian_numbers,
    hstar,
    interpolate,
)
from .enumeration import (
    PointSet,
    count_dilate,
    count_interior,
    interior_lattice_points,
    lattice_points,
)
from .errors import (
    AlcovedError,
    IndexOutOfRange,
    DimensionMismatch,
    Infeasible,
    Unbounded,
    NotFullDimensional,
    CyclicRelations,
    EnumerationBudgetExceeded,
    CandidateBudgetExceeded,
    NotLatticeEhrhart,
    DegenerateSimplex,
    HypothesisViolated,
    NoInteriorPoints,
    NotAFacet,
    NotUnimodal,
    EmptyList,
    TheoremViolation,
)
from .lattice_core import (
    Constraint,
    HRep,
    canonicalize,
    contains,
    dilate,
    is_full_dimensional,
    shortest_path_closure,
    tight_bounds,
    translate,
)
from .polytopes import (
    AlcovedPolytope,
    SplitMix64,
    derive_seed,
    make_chain_simplex,
    make_cube,
    make_hypersimplex,
    make_order_polytope,
    make_qd,
    make_sharp_distance_example,
    random_alcoved,
    validate,
)
from .triangulation import (
    BoundaryComplex,
    Triangulation,
    alcove_triangulation,
    boundary_compatible_triangulation,
    check_hypothesis,
    f_vector,
    facet_alcove_triangulation,
    faces,
    h_vector,
    induced_boundary_complex,
    is_unimodular,
    restriction_to_facet,
)

__version__ = "0.1.0"
