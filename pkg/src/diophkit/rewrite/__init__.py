from .brute import (
    SAT,
    UNSAT_UP_TO_BOUND,
    box_values,
    brute_force_solutions,
    extension_solutions,
    lowered_solutions,
    random_extension_equation,
    search_status,
)
from .compiler import (
    EXTERNAL_GADGET,
    FULL_MODE,
    INTEGRAL_MODE,
    BasisSpec,
    charpoly_coefficients,
    clear_denominators,
    components,
    coordinatize,
    coordinatize_system,
    coordinatize_tower,
    emit_relprime,
    emit_total_positivity,
    four_squares,
    reduce_generator,
    total_positivity_witness,
)
from .mpoly import MPoly, const, var
from .system import (
    BASE,
    BASE_NONZERO,
    DEFAULT_ORACLES,
    EXTENSION,
    INTEGER_ORACLES,
    INTEGRAL,
    SATISFIED,
    SKIPPED,
    VIOLATED,
    EvalReport,
    OpaqueNode,
    PolySystem,
    VarDecl,
    evaluate,
)
