"""Gaussian-damped spherical Bessel product integrals and their eta -> 0 limits.

Each integral ``int_0^inf x^2 exp(-eta x^2) f_n(Kx) g_n(kx) dx`` follows from
the cylindrical one at order b = n + 1/2 through
``f_n(z) = sqrt(pi/(2z)) F_{n+1/2}(z)``, which contributes the factor
``pi / (2 sqrt(K) sqrt(k))``.
"""

from __future__ import annotations

import cmath
import math

from . import cyl_gaussian as cyl
from .errors import DegenerateError, DivergenceError, DomainError
from .types import DistributionalValue, as_complex

__all__ = ["int_jj", "int_jy", "int_yy", "int_jym", "limit_eta0", "sph_prefactor"]


def _n(n) -> int:
    if int(n) != n or n < 0:
        raise DomainError("n must be a non-negative integer")
    return int(n)


def sph_prefactor(K, k) -> complex:
    """``pi / (2 sqrt(K) sqrt(k))``, the cylindrical-to-spherical factor."""
    return math.pi / (2.0 * cmath.sqrt(as_complex(K)) * cmath.sqrt(as_complex(k)))


def int_jj(n: int, K, k, eta: float) -> complex:
    """``int_0^inf x^2 e^{-eta x^2} j_n(Kx) j_n(kx) dx``; symmetric in K and k."""
    n = _n(n)
    return sph_prefactor(K, k) * cyl.int_JJ(n + 0.5, K, k, eta)


def int_jy(n: int, K, k, eta: float) -> complex:
    """``int_0^inf x^2 e^{-eta x^2} j_n(Kx) y_n(kx) dx`` (K is the j argument)."""
    n = _n(n)
    return sph_prefactor(K, k) * cyl.int_JY(n + 0.5, K, k, eta)


def int_yy(n: int, K, k, eta: float) -> complex:
    """``int_0^inf x^2 e^{-eta x^2} y_n(Kx) y_n(kx) dx``, convergent only for n = 0.

    Raises
    ------
    DivergenceError
        For ``n >= 1``: the integrand behaves like x^(-2n) at the origin.
    """
    n = _n(n)
    if n != 0:
        raise DivergenceError(
            f"I_yy diverges at the lower limit for n={n} (integrand ~ x^(-2n)); only n=0 converges"
        )
    K, k, eta = cyl._args(K, k, eta)
    return sph_prefactor(K, k) * cyl._EI(-0.5, K, k, eta) / (2.0 * eta)


def int_jym(n: int, K, k, eta: float) -> complex:
    """``int_0^inf x^2 e^{-eta x^2} j_n(Kx) j_{-n-1}(kx) dx = (-1)^n I_jj``.

    Here ``j_{-n-1} = (-1)^{n+1} y_n`` would diverge; the integral is the one
    with J_{-(n+1/2)}, which equals ``(-1)^n`` times the J_{n+1/2} product.
    """
    n = _n(n)
    return (-1) ** n * int_jj(n, K, k, eta)


def limit_eta0(kind: str, n: int, K, k) -> DistributionalValue:
    """Distributional eta -> 0 limit of the spherical integrals.

    ``jj`` and ``yy0`` tend to ``pi/(2Kk) delta(K-k)`` with no regular part;
    ``jy`` tends to the regular value ``K^n / (k^{n+1} (k^2 - K^2))`` with
    no delta term.

    Raises
    ------
    DegenerateError
        When ``K == k``; the exception carries the delta coefficient.
    """
    n = _n(n)
    K = as_complex(K)
    k = as_complex(k)
    if kind not in ("jj", "jy", "yy0"):
        raise DomainError("kind must be one of jj, jy, yy0")
    if kind == "yy0" and n != 0:
        raise DivergenceError("the yy limit exists only for n = 0")
    delta = 0j if kind == "jy" else math.pi / (2.0 * K * k)
    if K == k:
        raise DegenerateError(
            "regular part undefined at K = k; delta coefficient attached",
            delta_coeff=math.pi / (2.0 * K * K) if kind != "jy" else 0j,
        )
    if kind == "jy":
        return DistributionalValue(K**n / (k ** (n + 1) * (k * k - K * K)), 0j)
    return DistributionalValue(0j, delta)
