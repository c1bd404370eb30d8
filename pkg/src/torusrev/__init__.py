"""Reversing involutions of hyperbolic toral automorphisms, computed exactly."""

from .errors import (
    InvalidParams,
    NoRecipe,
    NonPositive,
    NotAnInvolution,
    NotHyperbolic,
    NotReversible,
    NotUnimodular,
    OrientationMismatch,
    OrientationPreserving,
    OrientationReversing,
    PerfectSquare,
    TorusRevError,
    TrivialInvolution,
)
from .involutions import (
    Family,
    FixedCurve,
    InvolutionSpec,
    classify_involution,
    enumerate_involutions,
    fixed_point_curves,
    materialize,
)
from .lattice import (
    IDENTITY,
    Mat2Z,
    Orientation,
    classify_hyperbolicity,
    det,
    inverse_unimodular,
    is_involution,
    mat_mul,
    mat_pow,
)
from .obstruction import build_obstruction, validate_obstruction
from .pell import (
    CFExpansion,
    ConicKind,
    PellProblem,
    PellSolutionSet,
    SolutionKind,
    brute_force_solutions,
    cf_sqrt,
    classify_conic,
    fundamental_solution,
    solve_general,
)
from .reversibility import (
    ReversibilityReport,
    analyze,
    construct_reversible_anosov,
    find_reversors,
    involution_family,
    is_r_reversible,
    orientation_reversing_analysis,
    reversor_composition_commutes,
)

__version__ = "0.1.0"
