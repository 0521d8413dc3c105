"""Stirling functions of the second kind with complex argument, and exact or
floating-point verification of the power-sum identities built from them."""

from .arithmetic import EXACT, EXTENDED, STANDARD, get_context
from .combinatorics import (
    EulerianPolynomial,
    binomial,
    eulerian_polynomial,
    harmonic,
    stirling1_unsigned,
    stirling2_exact,
)
from .errors import InvalidParams, NonFiniteResult, PowerSumError, SingularPoint
from .identities import (
    IdentityId,
    IdentityParams,
    IdentityReport,
    Weight,
    lemma_rhs,
    power_sum_direct,
    rhs_eq6,
    rhs_eq8,
    rhs_eq13,
    rhs_eq16,
    rhs_eq17,
    rhs_eq19,
    rhs_eq20,
    rhs_eq23,
    rhs_eq24,
    verify_identity,
)
from .stirling import (
    binomial_transform,
    binomial_transform_inverse,
    sigma_polynomial,
    sigma_polynomial_factored,
    stirling_function,
    stirling_function_exact,
    upper_sum_binomial,
    upper_sum_harmonic,
    upper_sum_reciprocal,
    upper_sum_stirling1,
    weighted_binomial_sum_closed,
)

__version__ = "0.1.0"
