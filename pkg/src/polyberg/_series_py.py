"""Pure-Python backend for the hot series and grid loops.

Mirrors `_series_cy.pyx`: same term recurrences and the same stopping rule.
The series sums run in double-double (compensated) arithmetic because their
condition number — peak term magnitude over final sum — reaches ~1e13 near
the sampling boundary, far beyond what plain doubles can absorb while the
oracle comparisons demand 1e-10 agreement.  Term coefficients are exact
integers; only powers of the argument and the accumulation need the
double-double pipeline, so the two backends agree to ~1e-30 and differ only
in rounding of the coefficient recurrences.

Every series uses the same stopping rule: after adding the term of index K,
the tail is bounded by |term| * rho/(1-rho) with

    rho = |x| * (1 + m/(K+1)) * (1 + n/max(K+m, 1))

clamped below 1; the sum stops once that bound drops under
tol * max(1, |partial sum|).  The envelope approaches |x| from above, so the
clamp only bites transiently near the convergence margin.
"""

from __future__ import annotations

import math

_RHO_MAX = 1.0 - 1e-9
_SPLIT = 134217729.0  # 2^27 + 1, Dekker splitting constant


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ca = _SPLIT * a
    ah = ca - (ca - a)
    al = a - ah
    cb = _SPLIT * b
    bh = cb - (cb - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _dd_add(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    s, e = _two_sum(ahi, bhi)
    e += alo + blo
    hi = s + e
    return hi, e - (hi - s)


def _dd_mul(ahi: float, alo: float, bhi: float, blo: float) -> tuple[float, float]:
    p, e = _two_prod(ahi, bhi)
    e += ahi * blo + alo * bhi
    hi = p + e
    return hi, e - (hi - p)


def _dd_from_int(v: int) -> tuple[float, float]:
    hi = float(v)
    return hi, float(v - int(hi))


def _tail_ok(abs_term: float, abs_x: float, k: int, n: int, m: int,
             abs_sum: float, tol: float) -> bool:
    if abs_term == 0.0 and abs_x != 0.0:
        # zero term with nonzero argument (the k+m = 0 corner): the ratio
        # envelope says nothing about the tail yet
        return False
    rho = abs_x * (1.0 + m / (k + 1.0)) * (1.0 + n / max(k + m, 1.0))
    if rho > _RHO_MAX:
        rho = _RHO_MAX
    bound = abs_term * rho / (1.0 - rho)
    return bound < tol * max(1.0, abs_sum)


def _sum_series(n: int, m: int, x: complex, tol: float, cap: int,
                coefficient, k_start: int) -> tuple[complex, bool]:
    """Shared double-double summation of sum_k coefficient(k) * x^k."""
    xr, xi = x.real, x.imag
    ax = abs(x)
    # x^k and the running sum as double-double complex numbers
    pr, prl, pi, pil = 1.0, 0.0, 0.0, 0.0
    if k_start == 1:
        pr, pi = xr, xi
    sr, srl, si, sil = 0.0, 0.0, 0.0, 0.0
    for k in range(k_start, cap + 1):
        chi, clo = _dd_from_int(coefficient(k))
        tr, trl = _dd_mul(pr, prl, chi, clo)
        ti, til = _dd_mul(pi, pil, chi, clo)
        sr, srl = _dd_add(sr, srl, tr, trl)
        si, sil = _dd_add(si, sil, ti, til)
        if _tail_ok(math.hypot(tr, ti), ax, k, n, m, math.hypot(sr, si), tol):
            return complex(sr, si), True
        # x^(k+1) = x^k * x, componentwise in double-double
        ar, arl = _dd_mul(pr, prl, xr, 0.0)
        br, brl = _dd_mul(pi, pil, xi, 0.0)
        ai, ail = _dd_mul(pr, prl, xi, 0.0)
        bi, bil = _dd_mul(pi, pil, xr, 0.0)
        pr, prl = _dd_add(ar, arl, -br, -brl)
        pi, pil = _dd_add(ai, ail, bi, bil)
    return complex(sr, si), False


def powser_neg(n: int, z: complex, tol: float, cap: int) -> tuple[complex, bool]:
    """Sum_{k>=1} k^n z^k truncated under the tail rule; n >= 0."""
    return _sum_series(n, 0, complex(z), tol, cap, lambda k: k**n, 1)


def deriv_series(n: int, m: int, t: complex, tol: float, cap: int) -> tuple[complex, bool]:
    """Sum_{k>=0} (k+1)_m (k+m)^n t^k truncated under the tail rule."""
    state = {"poch": math.factorial(m), "k": 0}

    def coefficient(k: int) -> int:
        # (k+1)_m maintained by the exact integer recurrence
        while state["k"] < k:
            j = state["k"]
            state["poch"] = state["poch"] * (j + m + 1) // (j + 1)
            state["k"] = j + 1
        return state["poch"] * (k + m) ** n

    return _sum_series(n, m, complex(t), tol, cap, coefficient, 0)


def ligocka_series(n: int, m: int, x: complex, tol: float, cap: int) -> tuple[complex, bool]:
    """Sum_{k>=0} ((m+1)_k / k!) (k+m)^n x^k truncated under the tail rule.

    (m+1)_k / k! is the integer binomial C(m+k, k), so the coefficients stay
    exact here too.
    """
    state = {"binom": 1, "k": 0}

    def coefficient(k: int) -> int:
        while state["k"] < k:
            j = state["k"]
            state["binom"] = state["binom"] * (m + j + 1) // (j + 1)
            state["k"] = j + 1
        return state["binom"] * (k + m) ** n

    return _sum_series(n, m, complex(x), tol, cap, coefficient, 0)


def _cpow_int(base: complex, k: int) -> complex:
    out = 1.0 + 0j
    b = base
    while k:
        if k & 1:
            out *= b
        b *= b
        k >>= 1
    return out


def grid_modulus(coeffs, pole_order: int, scale: float, res: int, rmax: float,
                 out_re, out_im, out_mod) -> None:
    """Fill the polar-grid modulus table for scale*num(t)/(1-t)^pole_order.

    Radius-major layout: row index i*res + j holds radius rmax*(i+1)/res and
    angle 2*pi*j/res.  Plain double precision: the grid feeds plots, not
    oracle comparisons.
    """
    from math import cos, sin, pi, hypot

    cs = [float(c) for c in coeffs]
    idx = 0
    for i in range(res):
        r = rmax * (i + 1) / res
        for j in range(res):
            th = 2.0 * pi * j / res
            t = complex(r * cos(th), r * sin(th))
            num = 0j
            for c in reversed(cs):
                num = num * t + c
            v = scale * num / _cpow_int(1.0 - t, pole_order)
            out_re[idx] = t.real
            out_im[idx] = t.imag
            out_mod[idx] = hypot(v.real, v.imag)
            idx += 1
