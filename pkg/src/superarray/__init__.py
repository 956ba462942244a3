"""Steerable differential beamformers for linear superarrays.

Design minimum-norm beamforming filters against a steered cosine-series
target pattern, evaluate directivity factor / white noise gain / pattern
approximation error, and jointly optimize element positions and
directivities with a genetic algorithm.
"""

from .arraymodel import (
    ArrayConfig,
    PhysicalConstants,
    SteeringContext,
    beampattern,
    coherence_matrix,
    df,
    element_pattern,
    manifold,
    validate_spacing,
    wng,
)
from .beamformer import (
    DEFAULT_REGULARIZATION,
    DesignSystem,
    FilterBank,
    assemble_system,
    design_bank,
    jacobi_anger_vector,
    series_beampattern,
    solve_filter,
)
from .errors import (
    CheckpointError,
    DegenerateQuotientError,
    InfeasibleError,
    RankDeficiencyError,
    SolverError,
    SuperarrayError,
    TruncationTooSmallError,
    UnderDeterminedError,
    ValidationError,
)
from .evaluation import (
    BaselineCatalog,
    BeampatternCut,
    SweepResult,
    band_summary,
    beampattern_cut,
    interleaved_superarray,
    sweep_frequency,
    sweep_steering,
    uniform_omni_array,
)
from .ga import (
    DesignProblem,
    GaParams,
    GaRunState,
    Individual,
    OptimizeResult,
    evaluate,
    init_population,
    optimize,
    repair,
    step,
)
from .idp import (
    IdpCoefficients,
    IdpSpec,
    expand_idp,
    idp_value,
    reconstruct_expansion,
    supercardioid_order2,
)
from .metrics import DesignGrid, direction_error, error_table, overall_error
from .specfun import bessel_j, bessel_j_orders, jacobi_anger_coeff

__all__ = [
    "ArrayConfig", "PhysicalConstants", "SteeringContext", "beampattern",
    "coherence_matrix", "df", "element_pattern", "manifold",
    "validate_spacing", "wng",
    "DEFAULT_REGULARIZATION", "DesignSystem", "FilterBank", "assemble_system",
    "design_bank", "jacobi_anger_vector", "series_beampattern", "solve_filter",
    "CheckpointError", "DegenerateQuotientError", "InfeasibleError",
    "RankDeficiencyError", "SolverError", "SuperarrayError",
    "TruncationTooSmallError", "UnderDeterminedError", "ValidationError",
    "BaselineCatalog", "BeampatternCut", "SweepResult", "band_summary",
    "beampattern_cut", "interleaved_superarray", "sweep_frequency",
    "sweep_steering", "uniform_omni_array",
    "DesignProblem", "GaParams", "GaRunState", "Individual", "OptimizeResult",
    "evaluate", "init_population", "optimize", "repair", "step",
    "IdpCoefficients", "IdpSpec", "expand_idp", "idp_value",
    "reconstruct_expansion", "supercardioid_order2",
    "DesignGrid", "direction_error", "error_table", "overall_error",
    "bessel_j", "bessel_j_orders", "jacobi_anger_coeff",
]

__version__ = "0.1.0"
