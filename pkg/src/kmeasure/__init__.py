"""Exact q-series arithmetic and partition statistics for identity checking."""

from .series import (
    Monomial,
    TriSeries,
    ONE,
    Q,
    Y,
    Z,
    YQ,
    pochhammer_finite,
    pochhammer_infinite,
)
from .partitions import (
    PartitionStats,
    consecutive_runs,
    durfee,
    durfee_gf,
    enumerate_partitions,
    format_partition,
    kmeasure,
    kmeasure_bruteforce,
    measure_gf,
    measure_gfs,
    parse_partition,
    partition_stats,
    sylvester_counts,
)
from .identities import (
    IdentityReport,
    Mismatch,
    bailey_daum,
    default_tasks,
    distinct_measure_gf_product,
    distinct_measure_gf_sum,
    durfee_closed_check,
    durfee_gf_closed,
    equidistribution_check,
    euler_first,
    euler_second,
    generalized_heine,
    heine_limit,
    nonnegativity_check,
    parity_check,
    partition_measure_gf_product,
    partition_measure_gf_sum,
    product_form_check,
    qdiff_check,
    qdiff_residual,
    run_suite,
    sum_form_check,
    sylvester_check,
)

__version__ = "0.1.0"
