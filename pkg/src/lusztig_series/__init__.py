"""Exact combinatorics of maximal Lusztig-series sizes for finite classical
groups: partition counts, the beta maximisation family, unipotent-character
counts, centralizer-shape maxima with attainment thresholds, the sharp
closed-form bounds, and a verification suite over golden tables.
"""

from .beta import (
    BetaResult,
    beta,
    beta_maximizers,
    beta_oracle,
    beta_prime,
    beta_ratio,
)
from .bounds import (
    BoundKind,
    GammaKind,
    MaxResult,
    Un5Column,
    Un5Constant,
    bound_value,
    max_alpha_beta,
    max_gamma,
    max_gamma_eq,
    piecewise_max,
    small_n_max,
    threshold,
    un5_constant,
)
from .errors import (
    BelowThresholdError,
    ShapeInvariantError,
    SizeGuardError,
    UsageError,
)
from .partitions import (
    Partition,
    as_partition,
    pair_partition_count,
    partition_count,
    partition_product,
    partitions_of,
)
from .shapes import (
    CentralizerShape,
    EigenPart,
    Family,
    GenericFactor,
    GroupSpec,
    ShapeClass,
    Threshold,
    attainment_threshold,
    center_index_multiplier,
    enumerate_shapes,
    max_series_size,
    minus_cap,
    minus_cap_oracle,
    nu_of_shape,
    shape_from_text,
    shape_to_text,
    validate_shape,
)
from .unipotent import (
    AlphaKind,
    alpha,
    alpha_minus,
    alpha_plus,
    alpha_upper_estimate,
    alpha_value,
    nu_linear,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaKind",
    "BelowThresholdError",
    "BetaResult",
    "BoundKind",
    "CentralizerShape",
    "EigenPart",
    "Family",
    "GammaKind",
    "GenericFactor",
    "GroupSpec",
    "MaxResult",
    "Partition",
    "ShapeClass",
    "ShapeInvariantError",
    "SizeGuardError",
    "Threshold",
    "Un5Column",
    "Un5Constant",
    "UsageError",
    "alpha",
    "alpha_minus",
    "alpha_plus",
    "alpha_upper_estimate",
    "alpha_value",
    "as_partition",
    "attainment_threshold",
    "beta",
    "beta_maximizers",
    "beta_oracle",
    "beta_prime",
    "beta_ratio",
    "bound_value",
    "center_index_multiplier",
    "enumerate_shapes",
    "max_alpha_beta",
    "max_gamma",
    "max_gamma_eq",
    "max_series_size",
    "minus_cap",
    "minus_cap_oracle",
    "nu_linear",
    "nu_of_shape",
    "pair_partition_count",
    "partition_count",
    "partition_product",
    "partitions_of",
    "piecewise_max",
    "shape_from_text",
    "shape_to_text",
    "small_n_max",
    "threshold",
    "un5_constant",
    "validate_shape",
]
