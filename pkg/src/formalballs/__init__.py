"""Exact formal-ball calculus: completions of pre-metric carriers.

Rational-only arithmetic end to end: upper reals with effort-indexed
bounds, formal balls and their diameter/way-inside/neighborhood calculus,
completion points and filters, certified maps, the presented locale of
maps, exact real and complex points, and finite function-algebra duality.
"""

from .numbers import INF, half_pow, parse_rational, rational_str
from .upper import Query, UpperReal
from .carriers import (
    Interval,
    MetricAxiomError,
    MetricCarrier,
    finite_space,
    finite_space_from_json,
    gaussian_rationals,
    product_space,
    rational_line,
)
from .balls import (
    BallOpen,
    FormalBall,
    ball,
    diameter_upper,
    is_positive,
    meet_witness,
    neighborhood,
    way_inside,
)
from .completion import (
    CertificateError,
    CompletionPoint,
    FilterSeed,
    apartness_query,
    limit_point,
    member_query,
    pair_point,
    point_distance,
    point_of_carrier,
    proj_point,
    regularize,
    seed_member_query,
    seed_of_point,
)
from .maps import (
    ISOMETRIC,
    METRIC,
    UNIFORM,
    MapRep,
    ModulusFn,
    RegionError,
    apply_map,
    classify_map,
    compose_maps,
    extend_by_density,
    identity_map,
    limit_of_maps,
)
from .function_locale import (
    MMInstance,
    PairProp,
    check_axiom,
    holds,
    round_trip,
    tau_from_point,
    validate_instance,
)
from .reals import (
    BoundViolation,
    ComplexPoint,
    RealPoint,
    abs_r,
    add_c,
    add_r,
    complex_of_rational,
    conj_c,
    max_r,
    min_r,
    modulus_c,
    modulus_interval,
    mul_c,
    mul_r,
    neg_c,
    neg_r,
    real_of_rational,
    scale_c,
    scale_r,
    sub_c,
    sub_r,
)
from .gelfand import (
    AlgebraElement,
    BasicOpenXR,
    Character,
    FiniteDiscreteSpace,
    admissibility_theorem_check,
    cstar_identity_check,
    duality_round_trip,
    has_point,
    in_unit_ball,
    is_admissible,
    spectrum_of_cn,
    sup_norm,
    verify_character,
)
from .lawsuite import run_law_suite, suite_json

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
