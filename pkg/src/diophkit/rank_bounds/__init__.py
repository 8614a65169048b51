from .certify import all_abs_greater, compare_abs, compare_abs2, conjugate_index
from .lemmas import (
    ONE_Y,
    TWO_Y,
    BoundTwoCertificate,
    DenominatorReport,
    bound_two_check,
    bound_two_preconditions,
    denominator_divisibility_check,
    escape_index,
    escape_terms,
    increasing_beyond,
    salem_test_unit,
    threshold_A,
    threshold_B,
    unit_power_approx,
)
from .norms import norm_one_brute_search
from .ranks import RankReport, Signature, check_rank_inequality, dirichlet_rank, rank_grid
from .shifts import (
    ShiftFamily,
    determinant,
    matrix_rank,
    next_shift,
    shift_determinant,
    shift_independence,
    shift_independence_by_values,
)
