"""Integration of permutation-invariant periodic functions.

Folded cubature rules, exact worst-case error formulas, and lower-bound
certificates that defeat any rule with too few nodes, in plain and
product-weighted smoothness classes.
"""

from .cubature import (
    CubatureRule,
    ErrorReport,
    apply_rule,
    folded_rectangle_rule,
    initial_error,
    rectangle_rule,
    rectangle_worst_case_error,
)
from .errors import (
    CapExceededError,
    CertificateError,
    DimensionMismatchError,
    NullspaceError,
    RefusalError,
    UnsupportedPatternError,
)
from .fooling import (
    CrosscheckReport,
    FoolingCertificate,
    NullspaceSolution,
    constraint_matrix,
    construct_certificate,
    crosscheck_coefficients,
    nullspace_solution,
)
from .fourier import (
    FourierPolynomial,
    MultiIndex,
    evaluate_at_points,
    random_polynomial,
)
from .korobov import korobov_norm, korobov_weight, riemann_zeta
from .symmetry import (
    InvariancePattern,
    OrbitStats,
    binary_orbit_representatives,
    canonicalize,
    critical_node_count,
    group_order,
    is_invariant,
    orbit,
    orbit_stats,
    parse_coordinate_set,
    parse_groups,
    symmetrize,
)
from .tractability import (
    InvarianceProfile,
    TractabilityReport,
    evaluate_profile,
    node_count_lower_bound,
)
from .weighted import (
    OrderedWeights,
    SupermultiplicativityReport,
    WeightPowerSums,
    WeightSchedule,
    check_weight_supermultiplicativity,
    construct_weighted_certificate,
    error_lower_bound,
    min_product_weight,
    order_weights,
    weight_power_sum,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CertificateError",
    "CrosscheckReport",
    "CubatureRule",
    "DimensionMismatchError",
    "ErrorReport",
    "FoolingCertificate",
    "FourierPolynomial",
    "InvarianceProfile",
    "InvariancePattern",
    "MultiIndex",
    "NullspaceError",
    "NullspaceSolution",
    "OrbitStats",
    "OrderedWeights",
    "RefusalError",
    "SupermultiplicativityReport",
    "TractabilityReport",
    "UnsupportedPatternError",
    "WeightPowerSums",
    "WeightSchedule",
    "apply_rule",
    "binary_orbit_representatives",
    "canonicalize",
    "check_weight_supermultiplicativity",
    "constraint_matrix",
    "construct_certificate",
    "construct_weighted_certificate",
    "critical_node_count",
    "crosscheck_coefficients",
    "error_lower_bound",
    "evaluate_at_points",
    "evaluate_profile",
    "folded_rectangle_rule",
    "group_order",
    "initial_error",
    "is_invariant",
    "korobov_norm",
    "korobov_weight",
    "min_product_weight",
    "node_count_lower_bound",
    "nullspace_solution",
    "orbit",
    "orbit_stats",
    "order_weights",
    "parse_coordinate_set",
    "parse_groups",
    "random_polynomial",
    "rectangle_rule",
    "rectangle_worst_case_error",
    "riemann_zeta",
    "symmetrize",
    "weight_power_sum",
]
