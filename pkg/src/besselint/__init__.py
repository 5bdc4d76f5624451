"""Gaussian-regularized Bessel-product integrals and Mie radial normalization integrals.

Modules
-------
special_fn
    Spherical and Riccati-Bessel functions of complex argument, modified
    Bessel functions with scaling.
assoc_bessel
    The associated Bessel functions h_{-1,b} and H_{-1,n}.
cyl_gaussian
    ``int_0^inf x e^{-eta x^2} C_b(Kx) D_b(kx) dx`` for the seven cylindrical
    product kinds.
sph_gaussian
    The spherical counterparts and their eta -> 0 limits.
closed_form
    Elementary closed forms of the M and N radial integrals.
oracle
    Adaptive Gauss-Kronrod quadrature used as an independent check.
conformance
    Analytic-versus-oracle and published-value comparison suites.
"""

from . import assoc_bessel, closed_form, conformance, cyl_gaussian, oracle, special_fn, sph_gaussian
from ._kernels import backend
from .errors import (
    AccuracyLossError,
    BesselIntError,
    DegenerateError,
    DivergenceError,
    DomainError,
    NonConvergenceError,
    OrderError,
    OverflowRangeError,
    PathError,
    UnboundedGrowthError,
)
from .types import (
    DistributionalValue,
    EvalResult,
    FieldType,
    GaussianIntegralSpec,
    GaussKind,
    Interval,
    Method,
    Pair,
    RadialIntegralSpec,
)

__version__ = "0.1.0"

__all__ = [
    "assoc_bessel",
    "closed_form",
    "conformance",
    "cyl_gaussian",
    "oracle",
    "special_fn",
    "sph_gaussian",
    "backend",
    "AccuracyLossError",
    "BesselIntError",
    "DegenerateError",
    "DivergenceError",
    "DomainError",
    "NonConvergenceError",
    "OrderError",
    "OverflowRangeError",
    "PathError",
    "UnboundedGrowthError",
    "DistributionalValue",
    "EvalResult",
    "FieldType",
    "GaussianIntegralSpec",
    "GaussKind",
    "Interval",
    "Method",
    "Pair",
    "RadialIntegralSpec",
    "__version__",
]
