"""Exact evaluation of the partition-analysis operator that keeps the
nonnegative powers of an elimination variable in

    lambda^k / ( prod_i (1 - x_i*lambda) * prod_j (1 - y_j/lambda) )

and then sets lambda to 1.  Everything is computed over the integers with
no floating point: sparse Laurent polynomials, Schur determinants, a
symmetrizing operator, an interpolation-style evaluator, and a brute-force
series oracle for cross-checking.
"""

from .algebra import (
    FactoredRational,
    Monomial,
    NonInvertibleSubstitutionError,
    NonSquareMatrixError,
    NotDivisibleError,
    Polynomial,
    det,
    exact_div,
    rational_equal,
    series_inverse,
)
from .exprparse import (
    OmegaExpressionAST,
    ParseError,
    StructureError,
    parse_expression,
    parse_letter,
)
from .omega import (
    CheckReport,
    ComparisonResult,
    ConstantLetterError,
    KTooLargeError,
    MethodDisagreement,
    OmegaProblem,
    OmegaResult,
    cross_check,
    omega_closed_form,
    omega_lagrange,
    omega_series_oracle,
    padded_names,
    zero_pad,
)
from .symfun import (
    Alphabet,
    LengthMismatchError,
    NotSymmetricError,
    Partition,
    RepeatedGeneratorsError,
    ValidityBoundError,
    cauchy_kernel,
    complete_h,
    elementary_e,
    is_symmetric,
    lagrange_op,
    partitions_in_box,
    partitions_of_weight,
    pi_omega,
    schur_bialternant,
    schur_jt,
    vandermonde,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CheckReport",
    "ComparisonResult",
    "ConstantLetterError",
    "FactoredRational",
    "KTooLargeError",
    "LengthMismatchError",
    "MethodDisagreement",
    "Monomial",
    "NonInvertibleSubstitutionError",
    "NonSquareMatrixError",
    "NotDivisibleError",
    "NotSymmetricError",
    "OmegaExpressionAST",
    "OmegaProblem",
    "OmegaResult",
    "ParseError",
    "Partition",
    "Polynomial",
    "RepeatedGeneratorsError",
    "StructureError",
    "ValidityBoundError",
    "cauchy_kernel",
    "complete_h",
    "cross_check",
    "det",
    "elementary_e",
    "exact_div",
    "is_symmetric",
    "lagrange_op",
    "omega_closed_form",
    "omega_lagrange",
    "omega_series_oracle",
    "padded_names",
    "parse_expression",
    "parse_letter",
    "partitions_in_box",
    "partitions_of_weight",
    "pi_omega",
    "rational_equal",
    "schur_bialternant",
    "schur_jt",
    "series_inverse",
    "vandermonde",
    "zero_pad",
]
