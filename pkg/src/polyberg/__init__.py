"""Bergman kernels of Gaussian-fiber Hartogs domains via polylogarithms.

The domain over C^n with fiber dimension m and weight mu > 0 is
{(z, zeta) : ||zeta||^2 < exp(-mu ||z||^2)}.  The package evaluates its
Bergman kernel through exact negative-order polylogarithm closed forms,
cross-validates against the weighted-kernel series oracle, and classifies
kernel zero-freeness (the Lu Qi-Keng property) with explicit witness points
whenever zeros exist.
"""

from ._backend import backend_name
from .combinatorics import (
    IntPolynomial,
    binomial,
    eulerian_number,
    eulerian_polynomial,
    eulerian_row,
    factorial,
    pochhammer,
    stirling2,
    stirling2_row,
)
from .errors import (
    DomainViolation,
    IterationCap,
    LengthMismatch,
    NonConvergent,
    PoleProximity,
    PolybergError,
    RootFindingFailure,
)
from .kernel import (
    ComplexVector,
    DomainPoint,
    KernelParams,
    argument_map,
    as_vector,
    bergman_closed,
    bergman_quotient,
    bergman_series,
    domain_contains,
    fock_bargmann,
    inner_product,
)
from .luqikeng import (
    LuQiKengVerdict,
    Provenance,
    Witness,
    ZeroStatus,
    classify,
    construct_witness,
    eulerian_roots,
    numerator_roots,
    zero_locus_grid,
)
from .polylog import (
    RationalKernelForm,
    li2_quotient_deriv,
    polylog_deriv_closed,
    polylog_deriv_numerator,
    polylog_deriv_series,
    polylog_neg_closed,
    polylog_series,
)

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "IntPolynomial",
    "binomial",
    "eulerian_number",
    "eulerian_polynomial",
    "eulerian_row",
    "factorial",
    "pochhammer",
    "stirling2",
    "stirling2_row",
    "DomainViolation",
    "IterationCap",
    "LengthMismatch",
    "NonConvergent",
    "PoleProximity",
    "PolybergError",
    "RootFindingFailure",
    "ComplexVector",
    "DomainPoint",
    "KernelParams",
    "argument_map",
    "as_vector",
    "bergman_closed",
    "bergman_quotient",
    "bergman_series",
    "domain_contains",
    "fock_bargmann",
    "inner_product",
    "LuQiKengVerdict",
    "Provenance",
    "Witness",
    "ZeroStatus",
    "classify",
    "construct_witness",
    "eulerian_roots",
    "numerator_roots",
    "zero_locus_grid",
    "RationalKernelForm",
    "li2_quotient_deriv",
    "polylog_deriv_closed",
    "polylog_deriv_numerator",
    "polylog_deriv_series",
    "polylog_neg_closed",
    "polylog_series",
    "__version__",
]
