"""qpartid: exact partition counts, Gaussian polynomials, and identity checks.

The polynomial layer (bigpoly) and the bracket constructors (qbinom) build
both sides of every q-identity; the counting layer (partitions) carries the
memoized counts and the brute-force enumeration oracle that anchors them;
identities holds the executable registry the CLI iterates over.
"""

from .bigpoly import (
    IntPoly,
    ONE,
    TruncSeries,
    ZERO,
    coeff_at,
    format_poly,
    monomial,
    poly_add,
    poly_eval_int,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_substitute_power,
    poly_truncate,
    series_geom_factor,
    series_mul,
    series_one,
)
from .identities import (
    CaseResult,
    FSequence,
    IdentityCase,
    IdentityDescriptor,
    check_F_theorem,
    check_combinatorial,
    check_count_identity,
    check_genfun,
    check_q_identity,
    check_sine_vanishing,
    derive_even_sum_corollary,
    evaluate_case,
    get_descriptor,
    iter_cases,
    make_case,
    parity_sum_sides,
    q_identity_sides,
    registry,
    resdbl_lhs,
    run_identity,
    standard_f_sequences,
    twice_cos,
    twice_sin_over_sqrt3,
)
from .partitions import (
    ORACLE_LIMIT_DEFAULT,
    UNBOUNDED,
    CountTable,
    PartitionSpec,
    check_pnmp_correspondence,
    check_qnmp_correspondence,
    count_P,
    count_P_most,
    count_P_nm,
    count_P_of,
    count_P_star,
    count_Q,
    count_Q_most,
    count_Q_nm,
    count_Q_of,
    count_Q_star,
    enumerate_partitions,
)
from .qbinom import (
    GaussKey,
    binom,
    binom2,
    bracket_base,
    gaussian,
    gaussian_general,
    gaussian_product_form_check,
    gaussian_symmetry_check,
)

__version__ = "0.1.0"
