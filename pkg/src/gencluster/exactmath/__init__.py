"""Exact arithmetic kernel: Laurent polynomials, univariate factorization,
Newton segments and integer-matrix normal forms."""

from .laurent import (
    ArityMismatchError,
    LaurentPolynomial,
    PolynomialSyntaxError,
    SegmentForm,
    arith,
    default_names,
    divide_exact,
    format_polynomial,
    laurent_gcd,
    parse_polynomial,
    segment_decompose,
)
from .matrices import (
    SmithResult,
    rational_rank,
    smith_normal_form,
    solve_gf2,
    solve_integer_system,
)
from .univariate import factor_univariate, squarefree_decompose

__all__ = [
    "ArityMismatchError",
    "LaurentPolynomial",
    "PolynomialSyntaxError",
    "SegmentForm",
    "SmithResult",
    "arith",
    "default_names",
    "divide_exact",
    "factor_univariate",
    "format_polynomial",
    "laurent_gcd",
    "parse_polynomial",
    "rational_rank",
    "segment_decompose",
    "smith_normal_form",
    "solve_gf2",
    "solve_integer_system",
    "squarefree_decompose",
]
