import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyberg import (
    IntPolynomial,
    binomial,
    eulerian_number,
    eulerian_polynomial,
    eulerian_row,
    factorial,
    pochhammer,
    stirling2,
)


class TestFactorial:
    def test_empty_product(self):
        assert factorial(0) == 1

    def test_small(self):
        assert factorial(3) == 6

    def test_beyond_64_bit(self):
        assert factorial(21) == 51090942171709440000

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            factorial(-1)


class TestBinomial:
    @pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (5, 0, 1), (3, 5, 0), (3, -1, 0)])
    def test_values(self, n, k, expected):
        assert binomial(n, k) == expected

    @given(st.integers(1, 40), st.integers(0, 40))
    def test_pascal_rule(self, n, k):
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(7, 0) == 1

    def test_rising(self):
        assert pochhammer(3, 2) == 12

    @pytest.mark.parametrize("k", range(8))
    def test_from_one_gives_factorial(self, k):
        assert pochhammer(1, k) == factorial(k)

    def test_identity_used_by_kernel_series(self):
        # (m+1)_k / k! == (k+1)_m / m!, exact over the desk range
        for k in range(31):
            for m in range(31):
                assert pochhammer(m + 1, k) * factorial(m) == pochhammer(k + 1, m) * factorial(k)


class TestEulerian:
    @pytest.mark.parametrize("n,m,expected", [(3, 2, 4), (4, 2, 11), (5, 1, 1), (5, 5, 1)])
    def test_values(self, n, m, expected):
        assert eulerian_number(n, m) == expected

    @pytest.mark.parametrize("m", [-1, 0, 6, 99])
    def test_out_of_range_is_zero(self, m):
        assert eulerian_number(5, m) == 0

    def test_first_rows_match_known_numerators(self):
        assert eulerian_row(1) == (1,)
        assert eulerian_row(2) == (1, 1)
        assert eulerian_row(3) == (1, 4, 1)
        assert eulerian_row(4) == (1, 11, 11, 1)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_row_sums_to_factorial(self, n):
        assert sum(eulerian_row(n)) == factorial(n)

    @given(st.integers(1, 14))
    def test_row_symmetry(self, n):
        row = eulerian_row(n)
        assert row == row[::-1]

    def test_polynomial_coefficients(self):
        assert eulerian_polynomial(1) == IntPolynomial([1])
        assert eulerian_polynomial(3) == IntPolynomial([1, 4, 1])
        assert eulerian_polynomial(4) == IntPolynomial([1, 11, 11, 1])
        assert eulerian_polynomial(6).degree == 5


class TestStirling2:
    @pytest.mark.parametrize("n", range(9))
    def test_diagonal(self, n):
        assert stirling2(n, n) == 1

    @pytest.mark.parametrize("n", range(1, 9))
    def test_single_block(self, n):
        assert stirling2(n, 1) == 1

    def test_recurrence_table_value(self):
        assert stirling2(4, 2) == 7

    def test_out_of_range_is_zero(self):
        assert stirling2(4, 5) == 0
        assert stirling2(4, -1) == 0
        assert stirling2(0, 0) == 1

    @pytest.mark.parametrize("x", range(1, 7))
    @pytest.mark.parametrize("n", range(9))
    def test_falling_factorial_expansion(self, x, n):
        # sum_k S(n,k) x(x-1)...(x-k+1) == x^n, exact
        total = 0
        for k in range(n + 1):
            falling = 1
            for i in range(k):
                falling *= x - i
            total += stirling2(n, k) * falling
        assert total == x**n


class TestIntPolynomial:
    def test_trims_trailing_zeros(self):
        assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)

    def test_zero_polynomial(self):
        p = IntPolynomial([])
        assert p.is_zero()
        assert p(5) == 0

    def test_arithmetic(self):
        p = IntPolynomial([1, 1])       # 1 + x
        q = IntPolynomial([-1, 1])      # -1 + x
        assert (p * q).coeffs == (-1, 0, 1)
        assert (p + q).coeffs == (0, 2)
        assert (p - p).is_zero()
        assert (3 * p).coeffs == (3, 3)
        assert (p**3).coeffs == (1, 3, 3, 1)

    def test_derivative(self):
        assert IntPolynomial([5, 1, 2, 4]).derivative().coeffs == (1, 4, 12)

    def test_exact_evaluation_at_rationals(self):
        p = IntPolynomial([1, -2, 3])
        x = Fraction(2, 7)
        assert p(x) == 1 - 2 * x + 3 * x**2

    def test_complex_evaluation(self):
        p = IntPolynomial([0, 1, 1])
        assert p(1j) == 1j + 1j**2

    def test_immutable(self):
        p = IntPolynomial([1])
        with pytest.raises(AttributeError):
            p.coeffs = (2,)

    @given(st.lists(st.integers(-50, 50), max_size=6),
           st.lists(st.integers(-50, 50), max_size=6),
           st.integers(-5, 5))
    def test_product_evaluation_homomorphism(self, a, b, x):
        pa, pb = IntPolynomial(a), IntPolynomial(b)
        assert (pa * pb)(x) == pa(x) * pb(x)


def test_concurrent_row_access():
    # memoized tables must tolerate simultaneous readers/builders
    import threading

    eulerian_row.cache_clear()
    results = []

    def worker():
        results.append(sum(eulerian_row(18)))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [math.factorial(18)] * 8
