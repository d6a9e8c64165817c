"""Evaluators for the constant-and-positive part of a rational Laurent series.

A problem is the Laurent series in an auxiliary variable t

    t^k / ( prod_i (1 - x_i * t) * prod_j (1 - y_j / t) )

with k >= 0 and monomial letters x_i, y_j.  The operator being computed
keeps the terms with nonnegative powers of t and then sets t = 1 (the
Omega_>= operator of partition analysis).  The result is a rational
function in the letters with denominator

    prod_i (1 - x_i) * prod_{i,j} (1 - x_i * y_j).

Three independent strategies are implemented:

  omega_series_oracle -- truncated brute-force expansion (slow, transparent)
  omega_closed_form   -- alternating sum of Schur determinants ("schur")
  omega_lagrange      -- interpolation-style sum over the x letters

``cross_check`` runs all three, compares them exactly, and reports timings
and term counts.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .algebra import FactoredRational, Monomial, Polynomial, exact_div, rational_equal
from .symfun import (
    Alphabet,
    RepeatedGeneratorsError,
    complete_h,
    partitions_in_box,
    schur_jt,
    vandermonde,
)


class KTooLargeError(ValueError):
    """The exact evaluators need k < len(x); zero-pad the problem first."""


class ConstantLetterError(ValueError):
    """The series oracle needs every letter to have positive total degree,
    otherwise truncation by degree never terminates."""


@dataclass(frozen=True)
class OmegaProblem:
    """k plus the two letter alphabets; immutable and hashable."""

    k: int
    x: Alphabet
    y: Alphabet = Alphabet()

    def __post_init__(self):
        if not isinstance(self.k, int) or isinstance(self.k, bool):
            raise TypeError(f"k must be an int, got {self.k!r}")
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if not isinstance(self.x, Alphabet) or not isinstance(self.y, Alphabet):
            raise TypeError("x and y must be Alphabet instances")
        if len(self.x) == 0:
            raise ValueError("at least one x letter is required")

    def variables(self) -> set[str]:
        names: set[str] = set()
        for g in self.x.generators + self.y.generators:
            names.update(g.variables())
        return names

    def describe(self) -> str:
        xs = ", ".join(g.to_text() for g in self.x)
        ys = ", ".join(g.to_text() for g in self.y)
        return f"k={self.k}, X={{{xs}}}, Y={{{ys}}}"


@dataclass(frozen=True)
class OmegaResult:
    """The value of one evaluation strategy.

    ``truncation`` is None for the exact methods and the degree bound for
    the series oracle (whose value is the truncated expansion, a polynomial).
    """

    value: FactoredRational
    method: str
    truncation: Optional[int] = None

    def to_json_obj(self) -> dict:
        obj = {"method": self.method, "truncation": self.truncation}
        obj.update(self.value.to_json_obj())
        return obj

    def to_text(self) -> str:
        return self.value.to_text()


def _denominator_factors(problem: OmegaProblem) -> list[Polynomial]:
    factors = []
    for gx in problem.x.generators:
        factors.append(Polynomial.one() - Polynomial.term(gx))
    for gx in problem.x.generators:
        for gy in problem.y.generators:
            factors.append(Polynomial.one() - Polynomial.term(gx * gy))
    return factors


def omega_series_oracle(problem: OmegaProblem, degree: int = 8) -> OmegaResult:
    """Brute-force evaluation, truncated to total degree <= degree.

    Expands 1/prod(1 - x_i t) = sum_i h_i(X) t^i and
    1/prod(1 - y_j/t) = sum_j h_j(Y) t^-j, keeps the pairs with
    i + k - j >= 0, sets t = 1, and truncates.  Every letter must have
    positive total degree so only finitely many (i, j) pairs contribute.
    """
    if degree < 0:
        raise ValueError(f"truncation degree must be >= 0, got {degree}")
    for g in problem.x.generators + problem.y.generators:
        if g.total_degree < 1:
            raise ConstantLetterError(
                f"letter {g.to_text()} has total degree {g.total_degree}; "
                "the series oracle needs every letter of positive degree")
    k = problem.k
    min_x = min(g.total_degree for g in problem.x.generators)
    if len(problem.y):
        min_y = min(g.total_degree for g in problem.y.generators)
        j_max = degree // min_y
    else:
        min_y = 1
        j_max = 0
    total = Polynomial.zero()
    for i in range(degree // min_x + 1):
        h_x = complete_h(i, problem.x)
        for j in range(j_max + 1):
            if i * min_x + j * min_y > degree:
                break
            if i + k - j < 0:
                continue
            total = total + (h_x * complete_h(j, problem.y)).truncated(degree)
    return OmegaResult(FactoredRational(total.truncated(degree)), "series", degree)


def omega_closed_form(problem: OmegaProblem) -> OmegaResult:
    """Exact evaluation as an alternating sum of Schur determinants.

    The numerator is  sum_mu (-1)^|mu| S_{mu'}(B) S_{(-k, mu)}(X)  with
    B = {1} + Y, summed over partitions mu with at most n-1 parts, each at
    most m+1.  Outside that box the terms vanish: a longer mu straightens
    the X determinant to one with more rows than letters, and a part above
    m+1 gives mu' more parts than B has letters.
    """
    n = len(problem.x)
    k = problem.k
    if k >= n:
        raise KTooLargeError(
            f"closed form needs k < n, got k={k} with n={n}; "
            f"zero-pad the problem with {k - n + 1} extra letters")
    m = len(problem.y)
    b = Alphabet([Monomial.one()]) + problem.y
    numerator = Polynomial.zero()
    for mu in partitions_in_box(n - 1, m + 1):
        coeff_b = schur_jt(mu.conjugate(), b)
        if not coeff_b:
            continue
        coeff_x = schur_jt((-k,) + mu.padded(n - 1), problem.x)
        if not coeff_x:
            continue
        term = coeff_b * coeff_x
        numerator = numerator + term if mu.weight % 2 == 0 else numerator - term
    return OmegaResult(FactoredRational(numerator, _denominator_factors(problem)), "schur")


def omega_lagrange(problem: OmegaProblem) -> OmegaResult:
    """Exact evaluation as an interpolation-style sum over the x letters:

        sum_i  x_i^(n-1-k) / ( (1 - x_i) B(x_i) prod_{l != i} (x_i - x_l) )

    with B(x_i) = prod_j (1 - x_i y_j).  Each term is put over the common
    denominator using 1/prod_{l != i}(x_i - x_l) = (-1)^i Delta(X - x_i) / Delta(X),
    and the Vandermonde Delta(X) then divides the combined numerator exactly.
    Needs pairwise-distinct x letters and k < n.
    """
    n = len(problem.x)
    k = problem.k
    if k >= n:
        raise KTooLargeError(
            f"lagrange evaluation needs k < n, got k={k} with n={n}; "
            f"zero-pad the problem with {k - n + 1} extra letters")
    if problem.x.has_repeats:
        raise RepeatedGeneratorsError(
            f"lagrange evaluation needs pairwise-distinct x letters, got {problem.x!r}")
    xg = problem.x.generators
    numerator = Polynomial.zero()
    for i in range(n):
        term = Polynomial.term(xg[i] ** (n - 1 - k))
        term = term * vandermonde(Alphabet(xg[:i] + xg[i + 1:]))
        for l, g in enumerate(xg):
            if l == i:
                continue
            term = term * (Polynomial.one() - Polynomial.term(g))
            for gy in problem.y.generators:
                term = term * (Polynomial.one() - Polynomial.term(g * gy))
        numerator = numerator + term if i % 2 == 0 else numerator - term
    quotient = exact_div(numerator, vandermonde(problem.x))
    return OmegaResult(FactoredRational(quotient, _denominator_factors(problem)), "lagrange")


def zero_pad(problem: OmegaProblem, extra: int) -> OmegaProblem:
    """Append ``extra`` fresh variables to the x alphabet.

    Setting the new variables to 0 afterwards recovers the original value;
    padding is how problems with k >= n become evaluable by the exact
    methods.  Fresh names follow the pattern x1, x2, ... skipping anything
    already in use.
    """
    if extra < 0:
        raise ValueError(f"cannot pad with {extra} letters")
    if extra == 0:
        return problem
    used = problem.variables()
    fresh: list[str] = []
    i = 1
    while len(fresh) < extra:
        name = f"x{i}"
        if name not in used:
            fresh.append(name)
            used.add(name)
        i += 1
    return OmegaProblem(problem.k, problem.x + Alphabet(fresh), problem.y)


def padded_names(original: OmegaProblem, padded: OmegaProblem) -> list[str]:
    """Names of the letters zero_pad added (for substituting them away)."""
    added = padded.x.generators[len(original.x):]
    return [g.exps[0][0] for g in added]


@dataclass(frozen=True)
class ComparisonResult:
    """Outcome of one pairwise method comparison."""

    pair: str
    ok: bool
    mismatch_monomial: Optional[str] = None
    left_coefficient: Optional[str] = None
    right_coefficient: Optional[str] = None

    def detail(self) -> str:
        if self.ok:
            return f"{self.pair}: PASS"
        return (f"{self.pair}: FAIL (coefficient of {self.mismatch_monomial}: "
                f"{self.left_coefficient} vs {self.right_coefficient})")


@dataclass
class CheckReport:
    """Everything cross_check learned: verdicts, sizes, and timings."""

    problem: str
    truncation: int
    comparisons: list[ComparisonResult]
    numerator_terms: dict[str, int]
    series_terms_by_degree: list[tuple[int, int]]
    timings: dict[str, float]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.comparisons)

    def to_text(self) -> str:
        lines = [f"problem: {self.problem}", f"series truncation degree: {self.truncation}"]
        lines.extend(c.detail() for c in self.comparisons)
        lines.append(f"overall: {'PASS' if self.ok else 'FAIL'}")
        lines.append("numerator terms: " + ", ".join(
            f"{method}={count}" for method, count in self.numerator_terms.items()))
        lines.append("series terms by degree: " + ", ".join(
            f"{d}:{c}" for d, c in self.series_terms_by_degree))
        lines.append("timings (s): " + ", ".join(
            f"{method}={seconds:.6f}" for method, seconds in self.timings.items()))
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "problem": self.problem,
            "truncation": self.truncation,
            "ok": self.ok,
            "comparisons": [
                {
                    "pair": c.pair,
                    "ok": c.ok,
                    "mismatch_monomial": c.mismatch_monomial,
                    "left_coefficient": c.left_coefficient,
                    "right_coefficient": c.right_coefficient,
                }
                for c in self.comparisons],
            "numerator_terms": self.numerator_terms,
            "series_terms_by_degree": [list(pair) for pair in self.series_terms_by_degree],
            "timings_seconds": {m: round(s, 6) for m, s in self.timings.items()},
        }


class MethodDisagreement(Exception):
    """Two evaluation strategies produced provably different values."""

    def __init__(self, report: CheckReport):
        self.report = report
        first_fail = next((c for c in report.comparisons if not c.ok), None)
        super().__init__(first_fail.detail() if first_fail else "method disagreement")


def _compare_polynomials(pair: str, left: Polynomial, right: Polynomial) -> ComparisonResult:
    diff = left - right
    if not diff.terms:
        return ComparisonResult(pair, True)
    mono = diff.sorted_terms()[-1][0]  # lowest differing monomial
    return ComparisonResult(pair, False, mono.to_text(),
                            str(left.coefficient(mono)), str(right.coefficient(mono)))


def _compare_rationals(pair: str, left: FactoredRational, right: FactoredRational) -> ComparisonResult:
    if left.factors == right.factors:
        return _compare_polynomials(pair, left.numerator, right.numerator)
    return _compare_polynomials(pair, left.numerator * right.denominator(),
                                right.numerator * left.denominator())


def cross_check(problem: OmegaProblem, truncate_degree: int = 8, *,
                corrupt_numerator: bool = False,
                raise_on_disagreement: bool = True) -> CheckReport:
    """Run all three strategies and compare them exactly.

    The closed form is compared with the lagrange value as a rational
    function, and its series expansion with the oracle up to the truncation
    degree.  ``corrupt_numerator`` adds 1 to the closed-form numerator
    first; it exists as a negative control so failure reporting stays
    honest.  Disagreement raises MethodDisagreement (carrying the report)
    unless ``raise_on_disagreement`` is False.
    """
    t0 = time.perf_counter()
    closed = omega_closed_form(problem)
    t1 = time.perf_counter()
    lagrange = omega_lagrange(problem)
    t2 = time.perf_counter()
    series = omega_series_oracle(problem, truncate_degree)
    t3 = time.perf_counter()

    closed_value = closed.value
    if corrupt_numerator:
        closed_value = FactoredRational(closed_value.numerator + 1, closed_value.factors)

    comparisons = [
        _compare_rationals("schur vs lagrange", closed_value, lagrange.value),
        _compare_polynomials("schur-series vs oracle",
                             closed_value.series(truncate_degree),
                             series.value.numerator),
    ]
    degree_counts = Counter(m.total_degree for m in series.value.numerator.terms)
    report = CheckReport(
        problem=problem.describe(),
        truncation=truncate_degree,
        comparisons=comparisons,
        numerator_terms={
            "schur": len(closed_value.numerator.terms),
            "lagrange": len(lagrange.value.numerator.terms),
            "series": len(series.value.numerator.terms),
        },
        series_terms_by_degree=[(d, degree_counts.get(d, 0)) for d in range(truncate_degree + 1)],
        timings={
            "schur": t1 - t0,
            "lagrange": t2 - t1,
            "series": t3 - t2,
        },
    )
    if raise_on_disagreement and not report.ok:
        raise MethodDisagreement(report)
    return report
