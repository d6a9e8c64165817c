"""Tests for the three evaluation strategies and the cross-check harness."""

import json

import pytest

from omegacalc.algebra import Monomial, Polynomial, rational_equal
from omegacalc.omega import (
    ConstantLetterError,
    KTooLargeError,
    MethodDisagreement,
    OmegaProblem,
    cross_check,
    omega_closed_form,
    omega_lagrange,
    omega_series_oracle,
    padded_names,
    zero_pad,
)
from omegacalc.symfun import Alphabet, RepeatedGeneratorsError


def V(name):
    return Polynomial.variable(name)


def problem(k, xs, ys=()):
    return OmegaProblem(k, Alphabet(list(xs)), Alphabet(list(ys)))


GOLDEN = problem(1, ["x1", "x2"], ["y"])


class TestOmegaProblem:
    def test_validation(self):
        with pytest.raises(ValueError):
            problem(-1, ["x"])
        with pytest.raises(ValueError):
            problem(0, [])
        with pytest.raises(TypeError):
            OmegaProblem("1", Alphabet(["x"]))

    def test_describe(self):
        assert GOLDEN.describe() == "k=1, X={x1, x2}, Y={y}"
        assert problem(0, ["x"]).describe() == "k=0, X={x}, Y={}"

    def test_variables(self):
        p = problem(0, [Monomial({"q": 2, "t": 1})], ["y"])
        assert p.variables() == {"q", "t", "y"}


class TestSeriesOracle:
    def test_geometric(self):
        x = V("x")
        r = omega_series_oracle(problem(0, ["x"]), 3)
        assert r.value.numerator == 1 + x + x ** 2 + x ** 3
        assert r.truncation == 3 and r.method == "series"

    def test_small_mixed_case(self):
        # k=2, X={x}, Y={y}: pairs (i, j) with i + 2 - j >= 0 and i + j <= 1
        r = omega_series_oracle(problem(2, ["x"], ["y"]), 1)
        assert r.value.numerator == 1 + V("x") + V("y")

    def test_hand_expansion_two_variables(self):
        # k=1, X={x1,x2}, Y={y}, degree 2, expanded by hand
        x1, x2, y = V("x1"), V("x2"), V("y")
        expected = (1 + x1 + x2 + y
                    + x1 ** 2 + x1 * x2 + x2 ** 2 + x1 * y + x2 * y)
        r = omega_series_oracle(problem(1, ["x1", "x2"], ["y"]), 2)
        assert r.value.numerator == expected

    def test_y_term_needs_k_budget(self):
        # k=0: the pair (i=0, j=1) has negative exponent and is dropped
        r = omega_series_oracle(problem(0, ["x"], ["y"]), 1)
        assert r.value.numerator == 1 + V("x")

    def test_monomial_letters(self):
        r = omega_series_oracle(problem(0, [Monomial({"q": 2})]), 5)
        q = V("q")
        assert r.value.numerator == 1 + q ** 2 + q ** 4

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            omega_series_oracle(problem(0, ["x"]), -1)

    def test_constant_letter_refused(self):
        with pytest.raises(ConstantLetterError):
            omega_series_oracle(problem(0, ["x"], [1]), 3)


class TestClosedForm:
    def test_golden_value(self):
        x1, x2, y = V("x1"), V("x2"), V("y")
        r = omega_closed_form(GOLDEN)
        assert r.method == "schur" and r.truncation is None
        assert r.value.numerator == 1 + y - y * (x1 + x2)
        expected_factors = sorted(
            [(1 - x1), (1 - x2), (1 - x1 * y), (1 - x2 * y)],
            key=lambda f: f.sort_key())
        assert [f for f, mult in r.value.factors] == expected_factors
        assert all(mult == 1 for _, mult in r.value.factors)

    def test_no_y_letters_gives_numerator_one(self):
        for n in (1, 2, 3):
            r = omega_closed_form(problem(0, [f"x{i}" for i in range(1, n + 1)]))
            assert r.value.numerator == 1

    def test_k_too_large(self):
        with pytest.raises(KTooLargeError):
            omega_closed_form(problem(1, ["x"]))
        with pytest.raises(KTooLargeError):
            omega_closed_form(problem(3, ["x1", "x2"], ["y"]))

    def test_matches_series(self):
        for k, xs, ys, d in [
            (0, ["x1", "x2"], ["y"], 5),
            (1, ["x1", "x2"], ["y1", "y2"], 4),
            (2, ["x1", "x2", "x3"], ["y"], 4),
        ]:
            p = problem(k, xs, ys)
            closed = omega_closed_form(p)
            oracle = omega_series_oracle(p, d)
            assert closed.value.series(d) == oracle.value.numerator

    def test_monomial_letters(self):
        p = problem(0, [Monomial({"q": 2}), Monomial({"t": 1})], ["y"])
        closed = omega_closed_form(p)
        oracle = omega_series_oracle(p, 6)
        assert closed.value.series(6) == oracle.value.numerator

    def test_repeated_letters_merge_denominator(self):
        p = problem(1, ["q", "q"])
        closed = omega_closed_form(p)
        assert [(f.to_text(), m) for f, m in closed.value.factors] == [("-1*q + 1", 2)]
        assert closed.value.series(8) == omega_series_oracle(p, 8).value.numerator

    def test_symmetric_in_x_letters(self):
        a = omega_closed_form(problem(1, ["x1", "x2"], ["y"]))
        b = omega_closed_form(problem(1, ["x2", "x1"], ["y"]))
        assert rational_equal(a.value, b.value)


class TestLagrange:
    def test_single_variable(self):
        r = omega_lagrange(problem(0, ["x1"]))
        assert r.value.numerator == 1
        assert [f.to_text() for f, _ in r.value.factors] == ["-1*x1 + 1"]

    def test_golden_matches_closed_form(self):
        closed = omega_closed_form(GOLDEN)
        lagr = omega_lagrange(GOLDEN)
        assert lagr.method == "lagrange"
        # same factored denominator, so the numerators must agree exactly
        assert lagr.value.factors == closed.value.factors
        assert lagr.value.numerator == closed.value.numerator

    def test_matches_closed_form_without_y(self):
        for k, xs in [(0, ["x1", "x2"]), (1, ["x1", "x2"]), (1, ["x1", "x2", "x3"])]:
            p = problem(k, xs)
            assert rational_equal(omega_lagrange(p).value, omega_closed_form(p).value)

    def test_distinct_monomial_letters(self):
        p = problem(1, [Monomial({"q": 2}), Monomial({"t": 1})], ["y"])
        assert rational_equal(omega_lagrange(p).value, omega_closed_form(p).value)

    def test_repeated_letters_refused(self):
        with pytest.raises(RepeatedGeneratorsError):
            omega_lagrange(problem(1, ["q", "q"]))

    def test_k_too_large(self):
        with pytest.raises(KTooLargeError):
            omega_lagrange(problem(2, ["x1", "x2"]))


class TestZeroPad:
    def test_identity_for_zero(self):
        assert zero_pad(GOLDEN, 0) is GOLDEN

    def test_negative_refused(self):
        with pytest.raises(ValueError):
            zero_pad(GOLDEN, -1)

    def test_fresh_names_skip_used(self):
        padded = zero_pad(GOLDEN, 2)
        assert padded_names(GOLDEN, padded) == ["x3", "x4"]
        p2 = problem(2, ["x"], ["y"])
        assert padded_names(p2, zero_pad(p2, 2)) == ["x1", "x2"]

    def test_padding_lifts_k_and_zeroing_recovers_the_value(self):
        p = problem(2, ["x"], ["y"])
        padded = zero_pad(p, 2)
        names = padded_names(p, padded)
        value = omega_closed_form(padded).value.substitute({n: 0 for n in names})
        assert value.series(6) == omega_series_oracle(p, 6).value.numerator

    def test_padding_is_value_neutral_when_already_evaluable(self):
        padded = zero_pad(GOLDEN, 1)
        names = padded_names(GOLDEN, padded)
        value = omega_closed_form(padded).value.substitute({n: 0 for n in names})
        assert rational_equal(value, omega_closed_form(GOLDEN).value)


class TestCrossCheck:
    def test_passing_report(self):
        report = cross_check(GOLDEN, 4)
        assert report.ok
        assert [c.pair for c in report.comparisons] == \
            ["schur vs lagrange", "schur-series vs oracle"]
        assert report.numerator_terms["schur"] == 4
        assert set(report.timings) == {"schur", "lagrange", "series"}
        assert all(t >= 0 for t in report.timings.values())
        assert [d for d, _ in report.series_terms_by_degree] == [0, 1, 2, 3, 4]
        assert sum(c for _, c in report.series_terms_by_degree) == \
            report.numerator_terms["series"]

    def test_corruption_is_detected(self):
        with pytest.raises(MethodDisagreement) as info:
            cross_check(GOLDEN, 4, corrupt_numerator=True)
        report = info.value.report
        assert not report.ok
        first = report.comparisons[0]
        assert first.mismatch_monomial == "1"
        assert (first.left_coefficient, first.right_coefficient) == ("2", "1")
        assert "coefficient of 1" in str(info.value)

    def test_corruption_without_raise(self):
        report = cross_check(GOLDEN, 4, corrupt_numerator=True,
                             raise_on_disagreement=False)
        assert not report.ok
        assert all(not c.ok for c in report.comparisons)

    def test_report_text_and_json(self):
        report = cross_check(GOLDEN, 3)
        text = report.to_text()
        assert "schur vs lagrange: PASS" in text
        assert "overall: PASS" in text
        obj = report.to_json_obj()
        json.dumps(obj)  # must be serializable
        assert obj["ok"] is True
        assert obj["problem"] == "k=1, X={x1, x2}, Y={y}"
        assert len(obj["comparisons"]) == 2
        assert obj["series_terms_by_degree"][0] == [0, 1]

    def test_mismatch_locates_lowest_differing_monomial(self):
        report = cross_check(problem(0, ["x1", "x2"], ["y"]), 3,
                             corrupt_numerator=True, raise_on_disagreement=False)
        # the +1 corruption shifts the constant coefficient first
        assert report.comparisons[0].mismatch_monomial == "1"


class TestSpecialization:
    def test_zeroing_a_letter_reduces_the_problem(self):
        big = omega_closed_form(problem(0, ["x1", "x2", "x3"], ["y"])).value
        small = omega_closed_form(problem(0, ["x1", "x2"], ["y"])).value
        assert rational_equal(big.substitute({"x3": 0}), small)

    def test_permuting_y_letters_is_neutral(self):
        a = omega_closed_form(problem(1, ["x1", "x2"], ["y1", "y2"]))
        b = omega_closed_form(problem(1, ["x1", "x2"], ["y2", "y1"]))
        assert rational_equal(a.value, b.value)
