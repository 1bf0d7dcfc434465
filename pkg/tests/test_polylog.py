import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_deriv_series, brute_polylog, peval, pscale, rat_deriv_k
from polyberg import (
    IntPolynomial,
    IterationCap,
    NonConvergent,
    PoleProximity,
    eulerian_polynomial,
    factorial,
    li2_quotient_deriv,
    polylog_deriv_closed,
    polylog_deriv_numerator,
    polylog_deriv_series,
    polylog_neg_closed,
    polylog_series,
)


def rel_to_unit(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a))


class TestSeries:
    def test_order_minus_one_at_half(self):
        # closed form z/(1-z)^2 gives exactly 2 at z = 0.5
        assert abs(polylog_series(-1, 0.5, 1e-12) - 2.0) < 1e-11

    def test_order_minus_two_at_half(self):
        # frozen via partial sums of sum k^2 2^-k
        brute = brute_polylog(2, 0.5, 200)
        assert abs(brute - 6.0) < 1e-13
        assert abs(polylog_series(-2, 0.5, 1e-12) - 6.0) < 1e-11

    def test_zero_argument(self):
        assert polylog_series(-5, 0.0, 1e-12) == 0

    def test_order_zero_geometric(self):
        assert abs(polylog_series(0, 0.25, 1e-12) - 0.25 / 0.75) < 1e-12

    def test_positive_order_rejected(self):
        with pytest.raises(ValueError):
            polylog_series(1, 0.5)

    def test_nonconvergent_outside_margin(self):
        with pytest.raises(NonConvergent):
            polylog_series(-1, 0.9999999)

    def test_iteration_cap_near_margin(self):
        # at the margin the tail rule needs far more than the cap allows
        with pytest.raises(IterationCap):
            polylog_series(-1, 1.0 - 1e-6, 1e-12)

    def test_matches_brute_partial_sums(self):
        rng = random.Random(7)
        for _ in range(20):
            n = rng.randint(0, 6)
            z = cmath.rect(rng.uniform(0, 0.7), rng.uniform(0, 2 * math.pi))
            assert rel_to_unit(polylog_series(-n, z, 1e-13), brute_polylog(n, z, 600)) < 1e-12


class TestClosedForm:
    def test_order_minus_three_at_half(self):
        v = polylog_neg_closed(3, 0.5)
        assert abs(v - 26.0) < 1e-12
        assert rel_to_unit(v, polylog_series(-3, 0.5, 1e-13)) < 1e-11

    def test_zero_factor(self):
        for n in range(1, 7):
            assert polylog_neg_closed(n, 0) == 0

    def test_numerator_vanishes_at_minus_one(self):
        assert abs(polylog_neg_closed(2, -1)) < 1e-15

    def test_pole_guard(self):
        with pytest.raises(PoleProximity):
            polylog_neg_closed(1, 1.0 + 1e-14)

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            polylog_neg_closed(0, 0.5)

    @settings(max_examples=60)
    @given(st.floats(1.1, 3.0), st.floats(0.0, 2 * math.pi), st.integers(1, 8))
    def test_inversion_identity(self, r, theta, n):
        # Li_{-n}(1/z) == (-1)^(n+1) Li_{-n}(z) on an annulus away from the pole
        z = cmath.rect(r, theta)
        if abs(1 - z) < 1e-6 or abs(1 - 1 / z) < 1e-6:
            return
        lhs = polylog_neg_closed(n, 1 / z)
        rhs = (-1) ** (n + 1) * polylog_neg_closed(n, z)
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), 1.0)


class TestDerivNumerator:
    def test_first_derivative_of_geometric_case(self):
        form = polylog_deriv_numerator(1, 1)
        assert form.numerator == IntPolynomial([1, 1])
        assert form.pole_order == 3
        assert form.scale == 1

    @pytest.mark.parametrize("m", range(0, 8))
    def test_n1_numerator_is_m_plus_t(self, m):
        form = polylog_deriv_numerator(1, m)
        assert form.numerator == IntPolynomial([m, 1])
        assert form.pole_order == m + 2
        assert form.scale == factorial(m)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_zeroth_derivative_reproduces_closed_form(self, n):
        form = polylog_deriv_numerator(n, 0)
        assert form.numerator == eulerian_polynomial(n).shift_up()
        assert form.pole_order == n + 1
        assert form.scale == 1

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("m", range(0, 6))
    def test_exact_match_with_repeated_differentiation(self, n, m):
        # independent oracle: differentiate t*A_n(t)/(1-t)^(n+1) m times exactly
        base = [0] + list(eulerian_polynomial(n).coeffs)
        num, pole = rat_deriv_k(base, n + 1, m)
        form = polylog_deriv_numerator(n, m)
        assert num == list(pscale(list(form.numerator.coeffs), form.scale))
        assert pole == form.pole_order

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("m", range(0, 5))
    def test_value_at_zero_is_m_power_n(self, n, m):
        # k = 0 series term: scale * numerator(0) == m! * m^n
        form = polylog_deriv_numerator(n, m)
        assert form.scale * form.numerator(0) == factorial(m) * m**n


class TestDerivClosed:
    @pytest.mark.parametrize("n,m,t,expected", [
        (1, 1, 0.0, 1.0),
        (1, 2, 0.0, 4.0),
        (2, 0, 0.5, 6.0),
    ])
    def test_frozen_values(self, n, m, t, expected):
        assert abs(polylog_deriv_closed(n, m, t) - expected) < 1e-12

    def test_pole_guard(self):
        with pytest.raises(PoleProximity):
            polylog_deriv_closed(2, 1, 1.0)

    def test_derivative_recurrence(self):
        # t * d/dt Li_{-n}(t) == Li_{-(n+1)}(t)
        rng = random.Random(11)
        for n in range(1, 7):
            for _ in range(10):
                t = cmath.rect(rng.uniform(0.05, 0.85), rng.uniform(0, 2 * math.pi))
                lhs = t * polylog_deriv_closed(n, 1, t)
                rhs = polylog_neg_closed(n + 1, t)
                assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), abs(rhs), 1e-30)

    def test_central_difference_matches_next_derivative(self):
        rng = random.Random(13)
        h = 1e-5
        for n in range(1, 6):
            for m in range(0, 4):
                for _ in range(5):
                    t = cmath.rect(rng.uniform(0.0, 0.8), rng.uniform(0, 2 * math.pi))
                    fd = (polylog_deriv_closed(n, m, t + h)
                          - polylog_deriv_closed(n, m, t - h)) / (2 * h)
                    exact = polylog_deriv_closed(n, m + 1, t)
                    assert abs(fd - exact) <= 1e-6 * max(1.0, abs(exact))


class TestDerivSeries:
    def test_only_constant_term_at_zero(self):
        assert polylog_deriv_series(1, 1, 0.0, 1e-12) == 1.0

    def test_against_closed_form(self):
        c = polylog_deriv_closed(2, 1, 0.25)
        s = polylog_deriv_series(2, 1, 0.25, 1e-11)
        assert abs(c - s) / abs(c) < 1e-10

    def test_m_zero_reduces_to_plain_polylog(self):
        rng = random.Random(17)
        for n in range(1, 7):
            t = cmath.rect(rng.uniform(0.1, 0.8), rng.uniform(0, 2 * math.pi))
            assert rel_to_unit(polylog_deriv_series(n, 0, t, 1e-13),
                               polylog_neg_closed(n, t)) < 1e-11

    def test_matches_brute_partial_sums(self):
        rng = random.Random(19)
        for _ in range(15):
            n, m = rng.randint(1, 5), rng.randint(0, 4)
            t = cmath.rect(rng.uniform(0, 0.6), rng.uniform(0, 2 * math.pi))
            assert rel_to_unit(polylog_deriv_series(n, m, t, 1e-13),
                               brute_deriv_series(n, m, t, 400)) < 1e-12

    def test_closed_vs_series_sample(self):
        rng = random.Random(23)
        for n in range(1, 9):
            for m in range(0, 5):
                for _ in range(10):
                    t = cmath.rect(rng.uniform(0.0, 0.9), rng.uniform(0, 2 * math.pi))
                    closed = polylog_deriv_closed(n, m, t)
                    series = polylog_deriv_series(n, m, t, 1e-12)
                    assert abs(closed - series) / max(1.0, abs(closed)) <= 1e-10

    def test_nonconvergent_outside_margin(self):
        with pytest.raises(NonConvergent):
            polylog_deriv_series(2, 1, 0.9999999)


class TestLi2QuotientDeriv:
    def test_base_case_is_closed_form_value(self):
        assert abs(li2_quotient_deriv(1, 0.0) - 1.0) < 1e-15

    def test_first_derivative_at_zero(self):
        assert abs(li2_quotient_deriv(2, 0.0) - 4.0) < 1e-15

    @pytest.mark.parametrize("m", range(1, 7))
    def test_zero_at_minus_m(self, m):
        assert li2_quotient_deriv(m, -m) == 0

    @pytest.mark.parametrize("m", range(1, 7))
    def test_exact_against_symbolic_differentiation(self, m):
        # (m-1)-fold derivative of (t+1)/(1-t)^3 must equal m!(t+m)/(1-t)^(m+2)
        num, pole = rat_deriv_k([1, 1], 3, m - 1)
        assert num == [factorial(m) * m, factorial(m)]
        assert pole == m + 2
        # root of the numerator sits exactly at -m
        assert peval(num, Fraction(-m)) == 0

    @pytest.mark.parametrize("m", range(1, 7))
    def test_agrees_with_general_derivative_machinery(self, m):
        # d^m/dt^m Li_{-1} == d^(m-1)/dt^(m-1) [Li_{-2}(t)/t]
        rng = random.Random(29)
        for _ in range(5):
            t = cmath.rect(rng.uniform(0, 0.9), rng.uniform(0, 2 * math.pi))
            a = li2_quotient_deriv(m, t)
            b = polylog_deriv_closed(1, m, t)
            assert abs(a - b) <= 1e-13 * max(abs(a), 1.0)

    def test_pole_guard(self):
        with pytest.raises(PoleProximity):
            li2_quotient_deriv(3, 1.0)


class TestExactReduction:
    def test_m_zero_exact_rational_agreement(self):
        # 50 rational sample points, compared exactly
        rng = random.Random(31)
        for n in range(1, 6):
            form = polylog_deriv_numerator(n, 0)
            poly = eulerian_polynomial(n)
            for _ in range(10):
                q = Fraction(rng.randint(-50, 50), rng.randint(51, 99))
                expected = q * Fraction(poly(q)) / (1 - q) ** (n + 1)
                assert form.evaluate_exact(q) == expected
