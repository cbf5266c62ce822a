"""Exact Stanley depth of monomial ideals and their quotients.

The depth is computed by searching interval partitions of the
characteristic poset; closed-form bounds for intersections of two primary
ideals live in :mod:`stanleydepth.bounds`.
"""

from .algebra import (
    Monomial,
    MonomialIdeal,
    QuotientModule,
    SupportShape,
    colon_ideal,
    colon_monomial,
    contains,
    contract_power_map,
    dim_quotient,
    height,
    ideal_sum,
    intersect,
    is_irreducible,
    is_primary,
    minimal_primes,
    minimalize,
    radical,
    support_shape,
)
from .bounds import BoundReport, bound_report
from .errors import (
    DimensionError,
    DomainError,
    InvariantViolation,
    NotApplicable,
    PreconditionError,
    SizeLimitError,
)
from .parsing import format_ideal, parse_ideal
from .poset import (
    INFINITE,
    Box,
    Interval,
    IntervalPartition,
    characteristic_poset,
    enumerate_partitions_naive,
    find_partition,
    rho,
    sdepth_exact,
    sdepth_with_witness,
)
from .stanley import (
    StanleyDecomposition,
    StanleySpace,
    decomposition_from_partition,
    radical_transfer,
    sdepth_of_decomposition,
    verify_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "QuotientModule",
    "SupportShape",
    "colon_ideal",
    "colon_monomial",
    "contains",
    "contract_power_map",
    "dim_quotient",
    "height",
    "ideal_sum",
    "intersect",
    "is_irreducible",
    "is_primary",
    "minimal_primes",
    "minimalize",
    "radical",
    "support_shape",
    "BoundReport",
    "bound_report",
    "DimensionError",
    "DomainError",
    "InvariantViolation",
    "NotApplicable",
    "PreconditionError",
    "SizeLimitError",
    "format_ideal",
    "parse_ideal",
    "INFINITE",
    "Box",
    "Interval",
    "IntervalPartition",
    "characteristic_poset",
    "enumerate_partitions_naive",
    "find_partition",
    "rho",
    "sdepth_exact",
    "sdepth_with_witness",
    "StanleyDecomposition",
    "StanleySpace",
    "decomposition_from_partition",
    "radical_transfer",
    "sdepth_of_decomposition",
    "verify_decomposition",
]
