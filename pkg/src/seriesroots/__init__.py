"""Exact integrality tests for rational powers of power series."""

from .arith import (
    ExponentSpec,
    PrimePower,
    binom_rational,
    digit_sum,
    factor_exponent,
    legendre_factorial_val,
    nu_p,
    rad,
)
from .criteria import (
    Criterion,
    CriterionResult,
    IntegralityReport,
    Verdict,
    Witness,
    check_dd,
    check_dd_additive,
    check_dd_extended,
    check_theorem_main,
    classify_quadratic,
    decide_rational_power,
    hrs_reduction_check,
    oracle_integrality,
)
from .parse import Query, parse_expression
from .seqgen import k_central_binomials, sharpness_certificate, trinomial_coefficients
from .series import (
    HorizonError,
    TruncatedSeries,
    congruent_mod_pk,
    exp_series,
    inverse,
    log_series,
    pow_rational,
    stride_subseries,
    substitute_x_to_xp,
)

__version__ = "0.1.0"
