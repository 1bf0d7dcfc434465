# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot series and grid loops.

Keep in lockstep with `_series_py.py`: same term recurrences and stopping
rule, with the summation pipeline in double-double arithmetic (FMA-based
here) because the series condition number reaches ~1e13 near the sampling
boundary.  Term coefficients follow the same exact recurrences; they are
carried as double-double instead of big integers, which agrees with the
pure backend to ~1e-30.
"""

from libc.math cimport cos, sin, hypot, fma, M_PI

cdef double _RHO_MAX = 1.0 - 1e-9


cdef struct dd:
    double hi
    double lo


cdef inline dd _dd_make(double hi, double lo) nogil:
    cdef dd r
    r.hi = hi
    r.lo = lo
    return r


cdef inline dd _dd_add(dd a, dd b) nogil:
    cdef double s = a.hi + b.hi
    cdef double bb = s - a.hi
    cdef double e = (a.hi - (s - bb)) + (b.hi - bb)
    e += a.lo + b.lo
    cdef double hi = s + e
    return _dd_make(hi, e - (hi - s))


cdef inline dd _dd_mul(dd a, dd b) nogil:
    cdef double p = a.hi * b.hi
    cdef double e = fma(a.hi, b.hi, -p)
    e += a.hi * b.lo + a.lo * b.hi
    cdef double hi = p + e
    return _dd_make(hi, e - (hi - p))


cdef inline dd _dd_mul_d(dd a, double b) nogil:
    cdef double p = a.hi * b
    cdef double e = fma(a.hi, b, -p)
    e += a.lo * b
    cdef double hi = p + e
    return _dd_make(hi, e - (hi - p))


cdef inline dd _dd_div_d(dd a, double b) nogil:
    cdef double q1 = a.hi / b
    cdef double p = q1 * b
    cdef double e = fma(q1, b, -p)
    cdef double q2 = (((a.hi - p) - e) + a.lo) / b
    cdef double hi = q1 + q2
    return _dd_make(hi, q2 - (hi - q1))


cdef inline dd _dd_neg(dd a) nogil:
    return _dd_make(-a.hi, -a.lo)


cdef inline dd _dd_ipow(double base, int n) nogil:
    """base^n in double-double for a double base and small n >= 0."""
    cdef dd out = _dd_make(1.0, 0.0)
    cdef dd b = _dd_make(base, 0.0)
    while n:
        if n & 1:
            out = _dd_mul(out, b)
        b = _dd_mul(b, b)
        n >>= 1
    return out


cdef inline bint _tail_ok(double abs_term, double abs_x, long k, int n, int m,
                          double abs_sum, double tol) nogil:
    if abs_term == 0.0 and abs_x != 0.0:
        # zero term with nonzero argument (the k+m = 0 corner): the ratio
        # envelope says nothing about the tail yet
        return False
    cdef double denom = k + m if k + m > 1 else 1.0
    cdef double rho = abs_x * (1.0 + m / (k + 1.0)) * (1.0 + n / denom)
    cdef double floor_sum = abs_sum if abs_sum > 1.0 else 1.0
    if rho > _RHO_MAX:
        rho = _RHO_MAX
    return abs_term * rho / (1.0 - rho) < tol * floor_sum


# Coefficient modes for the shared summation core.
cdef int _MODE_POW = 0      # k^n
cdef int _MODE_DERIV = 1    # (k+1)_m (k+m)^n
cdef int _MODE_LIGOCKA = 2  # C(m+k, k) (k+m)^n


cdef tuple _sum_series(int n, int m, double complex x, double tol, long cap,
                       int mode, long k_start):
    cdef double xr = x.real, xi = x.imag
    cdef double ax = hypot(xr, xi)
    cdef dd pr = _dd_make(1.0, 0.0), pi = _dd_make(0.0, 0.0)
    cdef dd sr = _dd_make(0.0, 0.0), si = _dd_make(0.0, 0.0)
    cdef dd coef = _dd_make(1.0, 0.0)   # running (k+1)_m or C(m+k, k)
    cdef dd c, tr, ti, ar, br, ai, bi
    cdef long k
    cdef int i
    cdef bint done = False
    if k_start == 1:
        pr = _dd_make(xr, 0.0)
        pi = _dd_make(xi, 0.0)
    if mode == _MODE_DERIV:
        for i in range(m):
            coef = _dd_mul_d(coef, i + 1.0)   # (1)_m = m!
    with nogil:
        for k in range(k_start, cap + 1):
            if mode == _MODE_POW:
                c = _dd_ipow(<double>k, n)
            else:
                c = _dd_mul(coef, _dd_ipow(<double>(k + m), n))
            tr = _dd_mul(pr, c)
            ti = _dd_mul(pi, c)
            sr = _dd_add(sr, tr)
            si = _dd_add(si, ti)
            if _tail_ok(hypot(tr.hi, ti.hi), ax, k, n, m,
                        hypot(sr.hi, si.hi), tol):
                done = True
                break
            ar = _dd_mul_d(pr, xr)
            br = _dd_mul_d(pi, xi)
            ai = _dd_mul_d(pr, xi)
            bi = _dd_mul_d(pi, xr)
            pr = _dd_add(ar, _dd_neg(br))
            pi = _dd_add(ai, bi)
            if mode == _MODE_DERIV:
                coef = _dd_div_d(_dd_mul_d(coef, k + m + 1.0), k + 1.0)
            elif mode == _MODE_LIGOCKA:
                coef = _dd_div_d(_dd_mul_d(coef, m + k + 1.0), k + 1.0)
    cdef double complex total
    total.real = sr.hi
    total.imag = si.hi
    return total, done


def powser_neg(int n, double complex z, double tol, long cap):
    """Sum_{k>=1} k^n z^k truncated under the tail rule; n >= 0."""
    return _sum_series(n, 0, z, tol, cap, _MODE_POW, 1)


def deriv_series(int n, int m, double complex t, double tol, long cap):
    """Sum_{k>=0} (k+1)_m (k+m)^n t^k truncated under the tail rule."""
    return _sum_series(n, m, t, tol, cap, _MODE_DERIV, 0)


def ligocka_series(int n, int m, double complex x, double tol, long cap):
    """Sum_{k>=0} ((m+1)_k / k!) (k+m)^n x^k truncated under the tail rule."""
    return _sum_series(n, m, x, tol, cap, _MODE_LIGOCKA, 0)


cdef inline double complex _cpow_int(double complex base, int k) nogil:
    cdef double complex out = 1
    cdef double complex b = base
    while k:
        if k & 1:
            out = out * b
        b = b * b
        k >>= 1
    return out


def grid_modulus(double[::1] coeffs, int pole_order, double scale, int res,
                 double rmax, double[::1] out_re, double[::1] out_im,
                 double[::1] out_mod):
    """Fill the polar-grid modulus table for scale*num(t)/(1-t)^pole_order.

    Radius-major layout: row index i*res + j holds radius rmax*(i+1)/res and
    angle 2*pi*j/res.  Plain double precision: the grid feeds plots, not
    oracle comparisons.
    """
    cdef Py_ssize_t ncoef = coeffs.shape[0]
    cdef Py_ssize_t i, j, c, idx = 0
    cdef double r, th
    cdef double complex t, num, v
    with nogil:
        for i in range(res):
            r = rmax * (i + 1) / res
            for j in range(res):
                th = 2.0 * M_PI * j / res
                t.real = r * cos(th)
                t.imag = r * sin(th)
                num = 0
                for c in range(ncoef - 1, -1, -1):
                    num = num * t + coeffs[c]
                v = scale * num / _cpow_int(1.0 - t, pole_order)
                out_re[idx] = t.real
                out_im[idx] = t.imag
                out_mod[idx] = hypot(v.real, v.imag)
                idx += 1
