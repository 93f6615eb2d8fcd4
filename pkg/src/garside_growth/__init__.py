"""Growth functions, Möbius polynomials, counting tables and growth rates of
spherical Artin-Tits monoids, plus the coefficients of the leading root of
the partial theta function."""

from .moebius import (
    Method,
    MoebiusResult,
    matrix_a,
    matrix_b,
    matrix_d,
    moebius_by_determinant,
    moebius_by_inclusion_exclusion,
    moebius_by_recurrence,
    moebius_polynomial,
)
from .oracle import (
    BudgetExceeded,
    WordClass,
    count_by_first_letter,
    count_theta_term,
    enumerate_classes,
)
from .polyseries import (
    CoeffStream,
    IntPolynomial,
    PolyMatrix,
    determinant,
    invert_series,
    series_mul_truncated,
)
from .presentations import (
    Family,
    MonoidSpec,
    SpecError,
    build_presentation,
    coxeter_diagram,
    lcm_length,
    parse_spec,
)
from .rates import RateEstimate, growth_rate, rho_sequence_a
from .tables import (
    GrowthTable,
    alpha_series,
    build_limit_table,
    build_table,
    build_table_a,
    build_table_b,
    build_table_d,
)
from .theta import (
    ThetaSeries,
    estimate_q_infinity,
    power_coefficients,
    theta_coefficients,
    verify_leading_root,
)

__version__ = "0.1.0"
