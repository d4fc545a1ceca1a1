"""Exact symbolic engine for associated polynomials along extremal-weight
paths, tensor-product cyclicity sets, and ordered Weyl-module products."""

from .exact import (
    A,
    GaussianRational,
    ParamPoly,
    ParamSeries,
    PowerSums,
    Rational,
    SymbolicRootsUnavailable,
    UniPoly,
    extend_power_sums,
    power_sums_to_monic,
    roots_affine_in_param,
    series_exp,
    series_from_poly_ratio,
    series_log,
    series_rescale,
)
from .rootsystem import (
    BUILTIN_ALGEBRAS,
    CartanData,
    InvalidCartanError,
    PathExponents,
    builtin_cartan,
    path_exponents,
    positive_roots,
    validate_cartan,
    weyl_dim,
    weyl_longest,
)
from .sl2 import (
    EvalModule,
    GeneratorLabel,
    act,
    check_relations,
    extremal_series_check,
    symmetrized_insertion_check,
)
from .walk import (
    CrosscheckError,
    StepRecord,
    WalkReport,
    WalkState,
    apply_step,
    extract_step_poly,
    init_walk,
    run_walk,
)
from .cyclicity import (
    CyclicityReport,
    DimensionReport,
    SSet,
    TSet,
    TensorFactor,
    WeylModuleSpec,
    build_ordered_product,
    check_cyclicity,
    compute_s_sets,
    compute_t_sets,
    dimension_bound,
    q_exponent_image,
)

__version__ = "0.1.0"
