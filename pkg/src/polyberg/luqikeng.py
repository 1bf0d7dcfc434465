"""Zero-freeness classification of the Hartogs-domain Bergman kernel.

The kernel vanishes somewhere iff the m-th polylogarithm derivative has a
root in the open unit disk: the combined kernel argument sweeps out exactly
that disk (for every mu), and the exponential prefactors never vanish.  Two
families are settled exactly: n = 1 is always zero-free (the lone numerator
root is t = -m, never strictly inside), and m = 1 with n >= 2 always has a
zero (the Eulerian polynomial of order n+1 has negative real simple roots in
reciprocal pairs, hence one strictly inside).  Everything else is decided
numerically from certified numerator roots, and every HasZero verdict can be
converted into an explicit pair of domain points where the kernel vanishes.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _backend
from .combinatorics import eulerian_row
from .errors import RootFindingFailure
from .kernel import DomainPoint, KernelParams, bergman_closed
from .polylog import polylog_deriv_numerator

#: Roots with ||r| - 1| inside this band give Indeterminate: the disk is
#: open, so a boundary root is not a kernel zero, but float roots this close
#: cannot be trusted to a side.
BOUNDARY_BAND = 1e-9
#: Coefficient growth degrades float root accuracy past this order.
CONDITIONING_LIMIT = 30


class ZeroStatus(enum.Enum):
    ZERO_FREE = "ZeroFree"
    HAS_ZERO = "HasZero"
    INDETERMINATE = "Indeterminate"


class Provenance(enum.Enum):
    THEOREM_EXACT = "TheoremExact"
    NUMERIC_ROOTS = "NumericRoots"


@dataclass(frozen=True)
class LuQiKengVerdict:
    """Classification outcome; witness_root present exactly for HasZero."""

    status: ZeroStatus
    witness_root: Optional[complex]
    provenance: Provenance
    note: str = ""


@dataclass(frozen=True)
class Witness:
    """Two domain points whose kernel value certifies a zero at argument alpha."""

    point_a: DomainPoint
    point_b: DomainPoint
    alpha: complex
    kernel_value: complex


# ---------------------------------------------------------------------------
# Eulerian roots: exact-sign bisection
# ---------------------------------------------------------------------------

def _sign_exact(coeffs: tuple[int, ...], x: Fraction) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * x + c
    return (v > 0) - (v < 0)


def _eval_exact(coeffs: tuple[int, ...], x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in reversed(coeffs):
        v = v * x + c
    return v


def eulerian_roots(n: int, tol: float = 1e-12) -> list[float]:
    """All n-1 roots of the order-n Eulerian polynomial, ascending.

    The roots are negative, real and simple, so sign-change bisection with
    exact integer arithmetic at rational points is complete: brackets come
    from a dyadic sign scan of [-B, -1/B] (B = 1 + max coefficient bounds
    the roots on both ends because the coefficient row is palindromic),
    subdivided until the sign-change count reaches n-1.  Each root is then
    bisected until |A_n(r)| <= tol * max coefficient and the bracket is
    narrower than the double-precision spacing at r.
    """
    if n < 1:
        raise ValueError(f"requires n >= 1, got {n}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if n == 1:
        return []
    coeffs = eulerian_row(n)
    maxcoeff = max(coeffs)
    bound = maxcoeff + 1

    signs: dict[Fraction, int] = {}

    def sign_at(x: Fraction) -> int:
        s = signs.get(x)
        if s is None:
            s = _sign_exact(coeffs, x)
            signs[x] = s
        return s

    # Dyadic warm-start grid covering [-B, -1/B], then 0 as the right anchor.
    pts: list[Fraction] = []
    mag = Fraction(bound)
    while mag * bound >= 1:
        pts.append(-mag)
        mag /= 2
    pts.append(Fraction(0))

    exact_roots: list[Fraction] = []
    exact_set: set[Fraction] = set()
    target = n - 1
    for _ in range(64):
        # Grid points that are themselves roots get replaced by close flanks
        # of opposite sign; the interval between the flanks is then excluded
        # from bracket counting so the root is not counted twice.
        cleaned: list[Fraction] = []
        for i, x in enumerate(pts):
            if sign_at(x) != 0:
                cleaned.append(x)
                continue
            if x not in exact_set:
                exact_set.add(x)
                exact_roots.append(x)
            left = pts[i - 1] if i > 0 else x - 1
            right = pts[i + 1] if i + 1 < len(pts) else Fraction(0)
            eps = min(x - left, right - x) / 1024
            while sign_at(x - eps) == 0 or sign_at(x + eps) == 0 \
                    or sign_at(x - eps) == sign_at(x + eps):
                eps /= 1024
            cleaned.extend([x - eps, x + eps])
        pts = sorted(set(cleaned))
        brackets = [
            (pts[i], pts[i + 1])
            for i in range(len(pts) - 1)
            if sign_at(pts[i]) != sign_at(pts[i + 1])
            and not any(pts[i] < er < pts[i + 1] for er in exact_roots)
        ]
        if len(exact_roots) + len(brackets) == target:
            break
        # Some interval still hides more than one root: halve everything.
        pts = sorted(set(pts) | {(a + b) / 2 for a, b in zip(pts, pts[1:])})
    else:
        raise RootFindingFailure(
            f"sign scan found {len(exact_roots) + len(brackets)} of {target} roots"
        )

    resid_limit = Fraction(tol) * maxcoeff
    ulp = Fraction(1, 2**60)
    roots = list(exact_roots)
    for lo, hi in brackets:
        slo = sign_at(lo)
        while True:
            mid = (lo + hi) / 2
            v = _eval_exact(coeffs, mid)
            if v == 0:
                break
            if (1 if v > 0 else -1) == slo:
                lo = mid
            else:
                hi = mid
            if hi - lo <= abs(mid) * ulp and abs(v) <= resid_limit:
                break
        roots.append((lo + hi) / 2)
    return sorted(float(r) for r in roots)


# ---------------------------------------------------------------------------
# General numerator roots: companion matrix + Newton polish
# ---------------------------------------------------------------------------

def _horner_pair(coeffs: np.ndarray, dcoeffs: np.ndarray, t: complex) -> tuple[complex, complex]:
    p = 0j
    for c in reversed(coeffs):
        p = p * t + c
    d = 0j
    for c in reversed(dcoeffs):
        d = d * t + c
    return p, d


def numerator_roots(n: int, m: int, tol: float = 1e-10) -> list[complex]:
    """All roots of the degree-n derivative numerator, residual-certified.

    Companion-matrix eigenvalues (numpy.roots) on max-rescaled coefficients,
    polished by Newton; every returned root r satisfies
    |numerator(r)| <= tol * max|coefficient| or RootFindingFailure is raised.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    form = polylog_deriv_numerator(n, m)
    maxc = max(abs(c) for c in form.numerator.coeffs)
    coeffs = np.array([c / maxc for c in form.numerator.coeffs], dtype=float)
    dcoeffs = np.array([i * c for i, c in enumerate(coeffs)][1:], dtype=float)
    raw = np.roots(coeffs[::-1])

    roots: list[complex] = []
    for r in raw:
        r = complex(r)
        best, best_res = r, abs(_horner_pair(coeffs, dcoeffs, r)[0])
        for _ in range(50):
            p, d = _horner_pair(coeffs, dcoeffs, r)
            if d == 0:
                break
            step = p / d
            r -= step
            res = abs(_horner_pair(coeffs, dcoeffs, r)[0])
            if res < best_res:
                best, best_res = r, res
            if abs(step) < 1e-16 * max(1.0, abs(r)):
                break
        if best_res > tol:
            raise RootFindingFailure(
                f"root residual {best_res:.3e} exceeds tol {tol:.3e} for (n={n}, m={m})"
            )
        roots.append(best)
    return sorted(roots, key=lambda r: (r.real, r.imag))


# ---------------------------------------------------------------------------
# Classification and witnesses
# ---------------------------------------------------------------------------

def _pick_witness(inside: list) -> complex:
    return complex(min(inside, key=abs))


def classify(n: int, m: int, tol: float = 1e-10,
             force_numeric: bool = False) -> LuQiKengVerdict:
    """Decide whether the kernel for (n, m) has a zero; mu plays no role.

    Exact fast paths cover n = 1 (ZeroFree) and m = 1, n >= 2 (HasZero with
    an in-disk Eulerian root as witness).  Otherwise the numerator roots
    decide: strictly inside the open unit disk means HasZero, all strictly
    outside means ZeroFree, and anything inside the boundary band is
    Indeterminate.  `force_numeric` skips the exact paths (used to
    cross-check the theorems against the numeric machinery).
    """
    if n < 1 or m < 1:
        raise ValueError(f"requires n, m >= 1, got ({n}, {m})")
    if not force_numeric:
        if n == 1:
            return LuQiKengVerdict(
                status=ZeroStatus.ZERO_FREE,
                witness_root=None,
                provenance=Provenance.THEOREM_EXACT,
                note=f"numerator root t = -{m} never lies in the open unit disk",
            )
        if m == 1:
            roots = eulerian_roots(n + 1, tol=min(tol, 1e-12))
            inside = [r for r in roots if abs(r) < 1.0 - BOUNDARY_BAND]
            return LuQiKengVerdict(
                status=ZeroStatus.HAS_ZERO,
                witness_root=_pick_witness(inside),
                provenance=Provenance.THEOREM_EXACT,
                note="in-disk root of the order n+1 Eulerian polynomial",
            )

    note = ""
    if n > CONDITIONING_LIMIT:
        note = (f"n = {n} > {CONDITIONING_LIMIT}: coefficient growth may "
                "degrade root accuracy")
    try:
        roots = numerator_roots(n, m, tol)
    except RootFindingFailure as exc:
        return LuQiKengVerdict(
            status=ZeroStatus.INDETERMINATE,
            witness_root=None,
            provenance=Provenance.NUMERIC_ROOTS,
            note=str(exc),
        )
    inside = [r for r in roots if abs(r) < 1.0 - BOUNDARY_BAND]
    banded = [r for r in roots if abs(abs(r) - 1.0) <= BOUNDARY_BAND]
    if inside:
        return LuQiKengVerdict(
            status=ZeroStatus.HAS_ZERO,
            witness_root=_pick_witness(inside),
            provenance=Provenance.NUMERIC_ROOTS,
            note=note,
        )
    if banded:
        extra = f"{len(banded)} root(s) within {BOUNDARY_BAND} of the unit circle"
        return LuQiKengVerdict(
            status=ZeroStatus.INDETERMINATE,
            witness_root=None,
            provenance=Provenance.NUMERIC_ROOTS,
            note=(note + "; " if note else "") + extra,
        )
    return LuQiKengVerdict(
        status=ZeroStatus.ZERO_FREE,
        witness_root=None,
        provenance=Provenance.NUMERIC_ROOTS,
        note=note,
    )


def construct_witness(params: KernelParams, alpha: complex) -> Witness:
    """Domain points realizing combined argument alpha, with the kernel value.

    With alpha = r e^{i theta}: z = z' = 0, zeta = sqrt(r) e_1 and
    zeta' = e^{-i theta} zeta, so the argument map lands exactly on alpha and
    the kernel magnitude is driven by the polylogarithm derivative there.
    """
    alpha = complex(alpha)
    r = abs(alpha)
    if r >= 1.0:
        raise ValueError(f"|alpha| must be < 1, got {r}")
    theta = cmath.phase(alpha)
    zeta = (complex(math.sqrt(r)),) + (0j,) * (params.m - 1)
    zeta2 = tuple(cmath.exp(-1j * theta) * c for c in zeta)
    origin = (0j,) * params.n
    point_a = DomainPoint(params, origin, zeta)
    point_b = DomainPoint(params, origin, zeta2)
    return Witness(
        point_a=point_a,
        point_b=point_b,
        alpha=alpha,
        kernel_value=bergman_closed(params, point_a, point_b),
    )


def zero_locus_grid(n: int, m: int, grid_resolution: int) -> np.ndarray:
    """Modulus of the m-th polylogarithm derivative on a polar grid, |t| <= 0.99.

    Returns a (resolution^2, 3) float array with columns (re, im, modulus),
    radius-major: row i*resolution + j holds radius 0.99*(i+1)/resolution and
    angle 2*pi*j/resolution.  Suitable for contour-plotting near-zeros.
    """
    if grid_resolution < 1:
        raise ValueError(f"resolution must be >= 1, got {grid_resolution}")
    form = polylog_deriv_numerator(n, m)
    coeffs = np.array([float(c) for c in form.numerator.coeffs], dtype=float)
    size = grid_resolution * grid_resolution
    out_re = np.empty(size)
    out_im = np.empty(size)
    out_mod = np.empty(size)
    _backend.grid_modulus(coeffs, form.pole_order, float(form.scale),
                          grid_resolution, 0.99, out_re, out_im, out_mod)
    return np.column_stack([out_re, out_im, out_mod])
