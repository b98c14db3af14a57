"""Probability densities on grids with OR/AND combination.

States of information are nonnegative densities over 1D or 2D coordinate
boxes.  Two operations combine them: OR is pointwise addition, AND is the
pointwise product divided by the null-information density μ of the working
coordinates.  On top of the algebra sit coordinate changes with analytic
Jacobians, noninformative priors and measurement models, empirical theory
building from simulated experiment campaigns, and conjunction-based inference,
including the demonstration that conditioning on a measure-zero slice is
frame-dependent while conditioning on a thin band is not.
"""

from ._kernels import HAS_NUMBA, PerformanceWarning, backend
from .algebra import (
    MAX_MIN,
    PRODUCT_NO_MU,
    SUM_PRODUCT,
    AxiomCheck,
    AxiomReport,
    Realization,
    and_combine,
    check_axioms,
    fuzzy_and,
    fuzzy_or,
    information_content,
    or_combine,
    sample_axiom_triples,
    scale,
    symmetric_kl,
    total_variation,
)
from .config import DEFAULT_TOLERANCES, Tolerances
from .coordinates import (
    CoordinateMap,
    InvarianceReport,
    Map2D,
    affine_map,
    affine_map_2d,
    compose,
    custom_map,
    exp_map,
    log_map,
    power_map,
    product_map,
    push_forward,
    reciprocal_map,
    shear_map,
    verify_invariance,
)
from .density import (
    Density,
    default_frame,
    evaluate,
    integrate,
    marginalize,
    normalize,
    require_same_space,
)
from .errors import (
    ConfigInvalid,
    ConfigurationError,
    DomainMismatch,
    EmptyInput,
    EnvelopeFailure,
    GridMismatch,
    InferenceSpaceError,
    InvalidBounds,
    InvalidGrid,
    IOFailure,
    ModelAxisMismatch,
    NegativeDensity,
    NegativeScalar,
    NeutralZero,
    NonFinite,
    NotNormalized,
    NumericalError,
    OutOfDomain,
    SchemaError,
    SingularJacobian,
    SliceCountMismatch,
    SupportViolation,
    UnknownAxis,
    UnknownCommand,
    UnnormalizedSlice,
    ZeroMass,
    ZeroSlice,
)
from .grids import LINEAR, LOGARITHMIC, Axis, Grid, grids_equal
from .inference import (
    ParadoxReport,
    Posterior,
    Summary,
    borel_kolmogorov_demo,
    conditional_density,
    intersect,
    predict,
    sample_posterior,
    summarize,
)
from .io import (
    density_from_dict,
    density_to_dict,
    read_density,
    read_theory,
    write_csv,
    write_density,
    write_theory,
)
from .priors import (
    BOXCAR,
    GAUSSIAN,
    JEFFREYS,
    LOGNORMAL,
    NONINFORMATIVE,
    SPHERICAL,
    UNIFORM,
    MeasurementModel,
    PriorSpec,
    benford_digit_probabilities,
    jeffreys_ppf,
    make_prior,
    measurement_density,
    measurement_profile,
    noninformative_profile,
    null_information_density,
    sample_prior,
)
from .theory import (
    SET_L,
    SET_T,
    ExperimentResult,
    FallingBodyLaw,
    Provenance,
    TheoryDensity,
    accumulate_theory,
    analytic_fall_theory,
    run_campaign,
    simulate_experiment,
    theory_from_conditional,
)

__version__ = "0.1.0"

__all__ = [
    "HAS_NUMBA",
    "PerformanceWarning",
    "backend",
    "MAX_MIN",
    "PRODUCT_NO_MU",
    "SUM_PRODUCT",
    "AxiomCheck",
    "AxiomReport",
    "Realization",
    "and_combine",
    "check_axioms",
    "fuzzy_and",
    "fuzzy_or",
    "information_content",
    "or_combine",
    "sample_axiom_triples",
    "scale",
    "symmetric_kl",
    "total_variation",
    "DEFAULT_TOLERANCES",
    "Tolerances",
    "CoordinateMap",
    "InvarianceReport",
    "Map2D",
    "affine_map",
    "affine_map_2d",
    "compose",
    "custom_map",
    "exp_map",
    "log_map",
    "power_map",
    "product_map",
    "push_forward",
    "reciprocal_map",
    "shear_map",
    "verify_invariance",
    "Density",
    "default_frame",
    "evaluate",
    "integrate",
    "marginalize",
    "normalize",
    "require_same_space",
    "ConfigInvalid",
    "ConfigurationError",
    "DomainMismatch",
    "EmptyInput",
    "EnvelopeFailure",
    "GridMismatch",
    "InferenceSpaceError",
    "InvalidBounds",
    "InvalidGrid",
    "IOFailure",
    "ModelAxisMismatch",
    "NegativeDensity",
    "NegativeScalar",
    "NeutralZero",
    "NonFinite",
    "NotNormalized",
    "NumericalError",
    "OutOfDomain",
    "SchemaError",
    "SingularJacobian",
    "SliceCountMismatch",
    "SupportViolation",
    "UnknownAxis",
    "UnknownCommand",
    "UnnormalizedSlice",
    "ZeroMass",
    "ZeroSlice",
    "LINEAR",
    "LOGARITHMIC",
    "Axis",
    "Grid",
    "grids_equal",
    "ParadoxReport",
    "Posterior",
    "Summary",
    "borel_kolmogorov_demo",
    "conditional_density",
    "intersect",
    "predict",
    "sample_posterior",
    "summarize",
    "density_from_dict",
    "density_to_dict",
    "read_density",
    "read_theory",
    "write_csv",
    "write_density",
    "write_theory",
    "BOXCAR",
    "GAUSSIAN",
    "JEFFREYS",
    "LOGNORMAL",
    "NONINFORMATIVE",
    "SPHERICAL",
    "UNIFORM",
    "MeasurementModel",
    "PriorSpec",
    "benford_digit_probabilities",
    "jeffreys_ppf",
    "make_prior",
    "measurement_density",
    "measurement_profile",
    "noninformative_profile",
    "null_information_density",
    "sample_prior",
    "SET_L",
    "SET_T",
    "ExperimentResult",
    "FallingBodyLaw",
    "Provenance",
    "TheoryDensity",
    "accumulate_theory",
    "analytic_fall_theory",
    "run_campaign",
    "simulate_experiment",
    "theory_from_conditional",
    "__version__",
]
