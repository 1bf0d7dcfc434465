"""Exact integer sequences behind every closed form in the package.

Everything here is computed with Python's arbitrary-precision integers:
Eulerian row sums reach n!, which leaves 64-bit range at n = 21, so no
floating point is allowed anywhere in this module.  All functions are pure
and the memoized row tables are safe to share between threads.
"""

from __future__ import annotations

import math
import numbers
from functools import lru_cache
from typing import Sequence


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k); zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(a: int, k: int) -> int:
    """Rising factorial a(a+1)...(a+k-1); 1 for k = 0."""
    if k < 0:
        raise ValueError(f"pochhammer requires k >= 0, got {k}")
    out = 1
    for i in range(k):
        out *= a + i
    return out


@lru_cache(maxsize=None)
def eulerian_row(n: int) -> tuple[int, ...]:
    """Row (A(n,1), ..., A(n,n)) of the Eulerian triangle.

    Each entry comes from the alternating sum
    A(n, m) = sum_{l=0..m} (-1)^l C(n+1, l) (m-l)^n, kept exact.
    """
    if n < 1:
        raise ValueError(f"eulerian_row requires n >= 1, got {n}")
    return tuple(_eulerian_sum(n, m) for m in range(1, n + 1))


def _eulerian_sum(n: int, m: int) -> int:
    total = 0
    for ell in range(m + 1):
        term = math.comb(n + 1, ell) * (m - ell) ** n
        total += -term if ell % 2 else term
    return total


def eulerian_number(n: int, m: int) -> int:
    """A(n, m); zero for m <= 0 or m > n."""
    if n < 1:
        raise ValueError(f"eulerian_number requires n >= 1, got {n}")
    if m <= 0 or m > n:
        return 0
    return eulerian_row(n)[m - 1]


@lru_cache(maxsize=None)
def stirling2_row(n: int) -> tuple[int, ...]:
    """Row (S(n,0), ..., S(n,n)) of the Stirling-2 triangle via the recurrence."""
    if n < 0:
        raise ValueError(f"stirling2_row requires n >= 0, got {n}")
    if n == 0:
        return (1,)
    prev = stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < n else 0
        row[k] = k * above + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """S(n, k) by the subtraction-free recurrence; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"stirling2 requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return stirling2_row(n)[k]


class IntPolynomial:
    """Integer-coefficient polynomial, coefficients stored in ascending degree.

    The zero polynomial is the empty coefficient tuple; otherwise the leading
    coefficient is nonzero.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction input, float for complex."""
        out = 0 * x  # match the numeric type of x
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, IntPolynomial):
            if self.is_zero() or other.is_zero():
                return IntPolynomial()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return IntPolynomial(out)
        if isinstance(other, numbers.Integral):
            return IntPolynomial([int(other) * c for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs) if i])

    def shift_up(self, k: int = 1) -> "IntPolynomial":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def eulerian_polynomial(n: int) -> IntPolynomial:
    """Degree n-1 polynomial whose coefficient of z^j is A(n, j+1)."""
    if n < 1:
        raise ValueError(f"eulerian_polynomial requires n >= 1, got {n}")
    return IntPolynomial(eulerian_row(n))
