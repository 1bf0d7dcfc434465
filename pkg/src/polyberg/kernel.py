"""Bergman kernel of the Gaussian-fiber Hartogs domain, by three routes.

The domain over C^n with fiber dimension m and weight mu > 0 is the set of
pairs (z, zeta) with ||zeta||^2 < exp(-mu ||z||^2).  Its kernel equals
mu^n / pi^(n+m) * exp(m mu <z,z'>) * (d^m Li_{-n}/dt^m) at the combined
argument exp(mu <z,z'>) <zeta,zeta'>, which stays inside the unit disk for
every valid pair of points.  The quotient route differentiates
Li_{-(n+1)}(c t)/t instead, and the series route sums the weighted-kernel
expansion directly; all three must agree and are cross-checked in tests.

Inner products are linear in the first slot and conjugate-linear in the
second, so kernels are holomorphic in the first point and anti-holomorphic
in the second.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from .combinatorics import binomial, factorial
from .errors import DomainViolation, LengthMismatch, NonConvergent, IterationCap
from .polylog import CONVERGENCE_MARGIN, SERIES_CAP, polylog_deriv_closed

#: exp() refuses exponents with real part above this.
EXP_GUARD = 700.0
#: Below this |<zeta,zeta'>| the quotient route switches to the derivative route.
QUOTIENT_SWITCH = 1e-14

ComplexVector = tuple[complex, ...]


def as_vector(values: Iterable[complex]) -> ComplexVector:
    """Coerce a sequence of numbers into a tuple of complex."""
    return tuple(complex(v) for v in values)


def inner_product(u: Sequence[complex], v: Sequence[complex]) -> complex:
    """Hermitian inner product sum_j u_j * conj(v_j)."""
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    return sum((complex(a) * complex(b).conjugate() for a, b in zip(u, v)), 0j)


def norm_sq(u: Sequence[complex]) -> float:
    c = [complex(a) for a in u]
    return math.fsum(a.real * a.real + a.imag * a.imag for a in c)


@dataclass(frozen=True)
class KernelParams:
    """Domain parameters: base dimension n, fiber dimension m, weight mu."""

    n: int
    m: int
    mu: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if not self.mu > 0:
            raise ValueError(f"mu must be positive, got {self.mu}")


def domain_contains(params: KernelParams, z: Sequence[complex],
                    zeta: Sequence[complex]) -> bool:
    """Strict defining inequality ||zeta||^2 < exp(-mu ||z||^2)."""
    if len(z) != params.n:
        raise LengthMismatch(f"z has length {len(z)}, expected n = {params.n}")
    if len(zeta) != params.m:
        raise LengthMismatch(f"zeta has length {len(zeta)}, expected m = {params.m}")
    return norm_sq(zeta) < math.exp(-params.mu * norm_sq(z))


class DomainPoint:
    """A point (z, zeta) of the domain, validated against its parameters.

    Construction rejects points violating the strict inequality; use
    `unchecked` for boundary experiments (kernel accuracy is then undefined).
    """

    __slots__ = ("z", "zeta")

    def __init__(self, params: KernelParams, z: Iterable[complex],
                 zeta: Iterable[complex]):
        zv, fv = as_vector(z), as_vector(zeta)
        if not domain_contains(params, zv, fv):
            raise DomainViolation(
                "point violates ||zeta||^2 < exp(-mu ||z||^2): "
                f"||zeta||^2 = {norm_sq(fv)}, bound = {math.exp(-params.mu * norm_sq(zv))}"
            )
        object.__setattr__(self, "z", zv)
        object.__setattr__(self, "zeta", fv)

    @classmethod
    def unchecked(cls, z: Iterable[complex], zeta: Iterable[complex]) -> "DomainPoint":
        p = object.__new__(cls)
        object.__setattr__(p, "z", as_vector(z))
        object.__setattr__(p, "zeta", as_vector(zeta))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("DomainPoint is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, DomainPoint)
                and self.z == other.z and self.zeta == other.zeta)

    def __hash__(self) -> int:
        return hash((self.z, self.zeta))

    def __repr__(self) -> str:
        return f"DomainPoint(z={list(self.z)}, zeta={list(self.zeta)})"


def _guarded_exp(w: complex) -> complex:
    if w.real > EXP_GUARD:
        raise OverflowError(f"exp argument real part {w.real} exceeds {EXP_GUARD}")
    return cmath.exp(w)


def fock_bargmann(n: int, mu: float, z: Sequence[complex],
                  w: Sequence[complex]) -> complex:
    """Gaussian-weighted reproducing kernel mu^n exp(mu <z,w>) / pi^n on C^n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not mu > 0:
        raise ValueError(f"mu must be positive, got {mu}")
    if len(z) != n or len(w) != n:
        raise LengthMismatch(f"expected two vectors of length {n}")
    return mu**n * _guarded_exp(mu * inner_product(z, w)) / math.pi**n


def argument_map(params: KernelParams, p: DomainPoint, q: DomainPoint) -> complex:
    """Combined kernel argument exp(mu <z,z'>) <zeta,zeta'>.

    For valid points its modulus is strictly below 1 (Cauchy-Schwarz against
    the defining inequality), which keeps every route inside its region.
    """
    return _guarded_exp(params.mu * inner_product(p.z, q.z)) * inner_product(p.zeta, q.zeta)


def _prefactor(params: KernelParams) -> float:
    return params.mu**params.n / math.pi ** (params.n + params.m)


def bergman_closed(params: KernelParams, p: DomainPoint, q: DomainPoint) -> complex:
    """Kernel via the m-th polylogarithm derivative at the combined argument."""
    c = _guarded_exp(params.mu * inner_product(p.z, q.z))
    t = c * inner_product(p.zeta, q.zeta)
    return _prefactor(params) * c**params.m * polylog_deriv_closed(params.n, params.m, t)


def bergman_quotient(params: KernelParams, p: DomainPoint, q: DomainPoint) -> complex:
    """Kernel via the (m-1)-th derivative of Li_{-(n+1)}(c t)/t at t = <zeta,zeta'>.

    The quotient has a removable singularity at t = 0; below QUOTIENT_SWITCH
    the derivative route is used instead of evaluating the 0/0 limit.
    """
    n, m = params.n, params.m
    t0 = inner_product(p.zeta, q.zeta)
    if abs(t0) < QUOTIENT_SWITCH:
        return bergman_closed(params, p, q)
    c = _guarded_exp(params.mu * inner_product(p.z, q.z))
    # Leibniz rule: d^(m-1)/dt^(m-1) [f(ct)/t] with f = Li_{-(n+1)},
    # using d^j/dt^j t^(-1) = (-1)^j j! t^(-(j+1)).
    total = 0j
    for i in range(m):
        deriv_f = polylog_deriv_closed(n + 1, i, c * t0)
        tail = factorial(m - 1 - i) * t0 ** -(m - i)
        term = binomial(m - 1, i) * c**i * deriv_f * tail
        if (m - 1 - i) % 2:
            term = -term
        total += term
    return _prefactor(params) * total


def bergman_series(params: KernelParams, p: DomainPoint, q: DomainPoint,
                   tol: float = 1e-12) -> complex:
    """Kernel via the weighted-kernel series, summed directly as the oracle.

    m! mu^n / pi^(n+m) * exp(m mu <z,z'>) * sum_k ((m+1)_k / k!) (k+m)^n x^k
    with x the combined argument; requires |x| <= 1 - CONVERGENCE_MARGIN.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n, m = params.n, params.m
    c = _guarded_exp(params.mu * inner_product(p.z, q.z))
    x = c * inner_product(p.zeta, q.zeta)
    if abs(x) > 1.0 - CONVERGENCE_MARGIN:
        raise NonConvergent(
            f"combined argument modulus {abs(x)} exceeds 1 - {CONVERGENCE_MARGIN}"
        )
    total, converged = _backend.ligocka_series(n, m, x, tol, SERIES_CAP)
    if not converged:
        raise IterationCap(f"series tail bound unmet after {SERIES_CAP} terms")
    return factorial(m) * _prefactor(params) * c**m * total
