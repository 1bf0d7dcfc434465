"""Negative-order polylogarithms: exact rational closed forms and series oracles.

For s = -n (n >= 1) the polylogarithm is the rational function
z * A_n(z) / (1-z)^(n+1) with A_n the Eulerian polynomial, and its m-th
derivative keeps a single pole at t = 1 of order n+m+1 whose numerator is an
exact integer polynomial built from Stirling-2 numbers and rising factorials.
The defining series and the termwise-differentiated series act as the
independent oracles for both closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import _backend
from .combinatorics import IntPolynomial, factorial, pochhammer, stirling2, eulerian_polynomial
from .errors import IterationCap, NonConvergent, PoleProximity

#: Series arguments must satisfy |z| <= 1 - CONVERGENCE_MARGIN.
CONVERGENCE_MARGIN = 1e-6
#: Closed forms refuse evaluation when |1 - t| < POLE_GUARD.
POLE_GUARD = 1e-12
#: Hard cap on series terms before IterationCap is raised.
SERIES_CAP = 10**6


def _horner(coeffs: tuple[float, ...], t: complex) -> complex:
    out = 0j
    for c in reversed(coeffs):
        out = out * t + c
    return out


@dataclass(frozen=True)
class RationalKernelForm:
    """scale * numerator(t) / (1-t)^pole_order with exact integer data."""

    numerator: IntPolynomial
    pole_order: int
    scale: int

    def evaluate(self, t: complex) -> complex:
        """Floating-point evaluation; raises PoleProximity near t = 1."""
        t = complex(t)
        if abs(1.0 - t) < POLE_GUARD:
            raise PoleProximity(f"|1 - t| < {POLE_GUARD} at t = {t}")
        num = _horner(tuple(float(c) for c in self.numerator.coeffs), t)
        return float(self.scale) * num / (1.0 - t) ** self.pole_order

    def evaluate_exact(self, x) -> Fraction:
        """Exact evaluation at a rational point x != 1."""
        x = Fraction(x)
        if x == 1:
            raise PoleProximity("exact evaluation at the pole t = 1")
        return Fraction(self.scale) * Fraction(self.numerator(x)) / (1 - x) ** self.pole_order

    def __call__(self, t: complex) -> complex:
        return self.evaluate(t)


def polylog_series(s: int, z: complex, tol: float = 1e-12) -> complex:
    """Defining series sum_{k>=1} k^(-s) z^k for integer s <= 0.

    Requires |z| <= 1 - CONVERGENCE_MARGIN; raises NonConvergent otherwise
    and IterationCap if the tail bound is not met within SERIES_CAP terms.
    """
    if s > 0:
        raise ValueError(f"series oracle covers s <= 0 only, got s = {s}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    z = complex(z)
    if abs(z) > 1.0 - CONVERGENCE_MARGIN:
        raise NonConvergent(f"|z| = {abs(z)} exceeds 1 - {CONVERGENCE_MARGIN}")
    total, converged = _backend.powser_neg(-s, z, tol, SERIES_CAP)
    if not converged:
        raise IterationCap(f"tail bound unmet after {SERIES_CAP} terms at z = {z}")
    return total


def polylog_neg_closed(n: int, z: complex) -> complex:
    """Closed form z * A_n(z) / (1-z)^(n+1) of the order -n polylogarithm."""
    if n < 1:
        raise ValueError(f"closed form requires n >= 1, got {n}")
    z = complex(z)
    if abs(1.0 - z) < POLE_GUARD:
        raise PoleProximity(f"|1 - z| < {POLE_GUARD} at z = {z}")
    coeffs = _eulerian_float_coeffs(n)
    return z * _horner(coeffs, z) / (1.0 - z) ** (n + 1)


@lru_cache(maxsize=None)
def _eulerian_float_coeffs(n: int) -> tuple[float, ...]:
    return tuple(float(c) for c in eulerian_polynomial(n).coeffs)


@lru_cache(maxsize=None)
def polylog_deriv_numerator(n: int, m: int) -> RationalKernelForm:
    """Exact rational form of the m-th derivative of the order -n polylogarithm.

    The numerator is sum_{j=0..n} (-1)^(n+j) (m+1)_j S(n+1, j+1) (1-t)^(n-j),
    expanded into powers of t with exact integers so no cancellation happens
    in floating point; the scale is m! and the pole order n+m+1.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    if m < 0:
        raise ValueError(f"requires m >= 0, got {m}")
    one_minus_t = IntPolynomial([1, -1])
    power = IntPolynomial([1])  # (1-t)^(n-j), built from j = n downward
    num = IntPolynomial()
    for j in range(n, -1, -1):
        c = pochhammer(m + 1, j) * stirling2(n + 1, j + 1)
        if (n + j) % 2:
            c = -c
        num = num + c * power
        power = power * one_minus_t
    return RationalKernelForm(numerator=num, pole_order=n + m + 1, scale=factorial(m))


def polylog_deriv_closed(n: int, m: int, t: complex) -> complex:
    """Evaluate the exact rational form of d^m Li_{-n}/dt^m at t."""
    return polylog_deriv_numerator(n, m).evaluate(t)


def polylog_deriv_series(n: int, m: int, t: complex, tol: float = 1e-12) -> complex:
    """Series oracle sum_{k>=0} (k+1)_m (k+m)^n t^k for the m-th derivative."""
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    if m < 0:
        raise ValueError(f"requires m >= 0, got {m}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    t = complex(t)
    if abs(t) > 1.0 - CONVERGENCE_MARGIN:
        raise NonConvergent(f"|t| = {abs(t)} exceeds 1 - {CONVERGENCE_MARGIN}")
    total, converged = _backend.deriv_series(n, m, t, tol, SERIES_CAP)
    if not converged:
        raise IterationCap(f"tail bound unmet after {SERIES_CAP} terms at t = {t}")
    return total


def li2_quotient_deriv(m: int, t: complex) -> complex:
    """(m-1)-th derivative of Li_{-2}(t)/t, which is m! (t + m) / (1-t)^(m+2).

    The constant factor is m!, confirmed against exact repeated
    differentiation of (t+1)/(1-t)^3; the lone zero sits at t = -m, on or
    outside the unit circle for every m >= 1.
    """
    if m < 1:
        raise ValueError(f"requires m >= 1, got {m}")
    t = complex(t)
    if abs(1.0 - t) < POLE_GUARD:
        raise PoleProximity(f"|1 - t| < {POLE_GUARD} at t = {t}")
    return factorial(m) * (t + m) / (1.0 - t) ** (m + 2)
