"""Bounds on insertion/deletion codes: list-size and cardinality bounds via
binary constant-weight codes, a tightness construction, asymptotic rate
bounds, and brute-force oracles."""

from .asymptotics import (
    OptimizerConfig,
    RatePoint,
    entropy_slope_check,
    lp_asymptotic,
    lp_objective,
    q_ary_entropy,
    rate_curve,
    rlp,
    yasunaga_asymptotic,
)
from .bounds import (
    BoundValue,
    CodeParams,
    ListParams,
    best_bound,
    hy_list_bound,
    main_elias_bound,
    main_johnson_list_bound,
    shortened_sphere_packing,
    singleton_bound,
    sphere_packing_bound,
    yasunaga_elias_bound,
)
from .constant_weight import (
    CWAnswer,
    CWQuery,
    SupportFamily,
    cw_upper_bound,
    hamming_distance_supports,
    johnson_bound_cw,
    max_constant_weight_exact,
    min_distance,
)
from .constructions import (
    TightnessInstance,
    build_tightness_instance,
    encode_list_to_constant_weight,
    verify_tightness_instance,
)
from .errors import AlphabetTooSmallError, EnumerationCapError, NeedsUpperModeError, ParameterError
from .levenshtein import (
    Code,
    Word,
    deletion_ball,
    fixed_radius_ball,
    in_fixed_radius_ball,
    insertion_ball,
    insertion_ball_size,
    lcs,
    levenshtein_distance,
    min_levenshtein_distance,
)
from .oracle import (
    OracleResult,
    averaging_identity,
    max_indel_code_exact,
    shortening_experiment,
    verify_list_bound_everywhere,
)

__version__ = "0.1.0"
