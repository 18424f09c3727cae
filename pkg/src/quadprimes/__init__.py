"""Ramanujan sums, square indicators, and prime counts over q*n^2 + a."""
from .arith import (
    Factorization,
    VonMangoldtValue,
    euler_phi,
    factorize,
    is_prime,
    jacobi,
    liouville,
    mobius,
    next_prime_above,
    von_mangoldt,
)
from .asymptotics import (
    ComparisonRow,
    CountResult,
    EulerProductReport,
    bateman_horn_constant,
    compare_asymptotic,
    count_primes_poly,
    epsilon_factor,
    linear_psi_odd,
    psi2_count,
)
from .errors import CapacityError, LemmaCounterexample, PrecisionError
from .identity import (
    DecompositionReport,
    PolynomialSpec,
    check_admissible,
    error_term_decomposition,
    error_term_total,
    lhs_quadratic_psi,
    lower_bound_check,
    main_term_decomposition,
    make_context,
    rhs_linear_expansion,
)
from .indicator import (
    SquareVerdict,
    isqrt,
    square_char_exp,
    square_char_exp_value,
    square_char_isqrt,
    square_char_liouville,
)
from .ramanujan import (
    ModulusContext,
    RamanujanEvaluation,
    parity_sum,
    parity_value,
    ramanujan_closed,
    ramanujan_direct,
    ramanujan_divisor,
)
from .verification import (
    Counterexample,
    VerificationReport,
    verify_char,
    verify_error_term,
    verify_identity,
    verify_liouville,
    verify_main_term,
    verify_parity,
    verify_ramanujan,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ComparisonRow",
    "Counterexample",
    "CountResult",
    "DecompositionReport",
    "EulerProductReport",
    "Factorization",
    "LemmaCounterexample",
    "ModulusContext",
    "PolynomialSpec",
    "PrecisionError",
    "RamanujanEvaluation",
    "SquareVerdict",
    "VerificationReport",
    "VonMangoldtValue",
    "bateman_horn_constant",
    "check_admissible",
    "compare_asymptotic",
    "count_primes_poly",
    "epsilon_factor",
    "error_term_decomposition",
    "error_term_total",
    "euler_phi",
    "factorize",
    "is_prime",
    "isqrt",
    "jacobi",
    "lhs_quadratic_psi",
    "linear_psi_odd",
    "liouville",
    "lower_bound_check",
    "main_term_decomposition",
    "make_context",
    "mobius",
    "next_prime_above",
    "parity_sum",
    "parity_value",
    "psi2_count",
    "ramanujan_closed",
    "ramanujan_direct",
    "ramanujan_divisor",
    "rhs_linear_expansion",
    "square_char_exp",
    "square_char_exp_value",
    "square_char_isqrt",
    "square_char_liouville",
    "verify_char",
    "verify_error_term",
    "verify_identity",
    "verify_liouville",
    "verify_main_term",
    "verify_parity",
    "verify_ramanujan",
    "von_mangoldt",
]
