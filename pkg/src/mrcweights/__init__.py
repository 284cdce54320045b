"""Exact weight enumerators, Tutte polynomials and support weights of maximally recoverable codes."""

__version__ = "0.1.0"

from .gf import GF, FieldSpec, enumerate_elements, field_arith
from .code import (
    LinearCode,
    WeightDistribution,
    dual,
    enumerate_support_weight_distribution,
    enumerate_weight_distribution,
    ghw_brute,
    is_mds,
    min_distance,
    puncture,
    rank_of_columns,
    read_code,
    reed_solomon,
    write_code,
)
from .matroid import (
    DATA_LOCAL,
    LOCAL,
    CodeMatroid,
    MrcParams,
    RankSizeDistribution,
    UniformMatroid,
    ghw_from_matroid,
    is_independent,
    mrc_matroid,
    rank,
    rank_size_counts_closed_form,
    rank_size_distribution,
)
from .tutte import (
    BivariatePolynomial,
    britz_support_weight_enumerator,
    gaussian_binomial,
    greene_weight_enumerator,
    macwilliams_transform,
    tutte_from_distribution,
    tutte_mds,
)
from .formulas import (
    data_local_ell_weight_enumerators,
    data_local_two_dual_weight_enumerators,
    data_local_two_ghw,
    data_local_two_hsw,
    data_local_two_weight_enumerators,
    local_two_ghw,
    local_two_hsw,
    local_two_weight_enumerators,
    mds_weight_enumerators,
    singleton_locality_bound,
    table_discrepancies,
)
from .mrc import MrcInstance, construct_mrc, verify_data_local_mrc, verify_local_mrc
