"""Complex-argument special functions.

Spherical Bessel, Neumann and Hankel functions and their Riccati forms come
from the recurrence kernels in :mod:`besselint._kernels`.  Modified Bessel
functions I and K of real order are taken from :mod:`scipy.special`, which
already provides exponentially scaled variants.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy import special as sc

from . import _kernels
from .errors import DomainError, OverflowRangeError
from .types import as_complex

__all__ = [
    "RiccatiTriple",
    "sph_bessel_j",
    "sph_bessel_y",
    "sph_hankel",
    "sph_jy",
    "riccati",
    "riccati_arrays",
    "mod_bessel_i",
    "mod_bessel_k",
    "mod_bessel_i_asymptotic",
    "bessel_j",
    "bessel_y",
    "log_gamma",
]


def _check_order(n) -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"order must be a non-negative integer, got {n!r}")
    return int(n)


def sph_jy(nmax: int, z):
    """Return arrays ``(j, y)`` of shape ``(len(z), nmax + 1)``.

    ``y`` is not defined at ``z = 0``; entries there are non-finite.
    """
    nmax = _check_order(nmax)
    return _kernels.sph_jy_seq(nmax, np.atleast_1d(np.asarray(z, dtype=complex)))


def sph_bessel_j(n: int, z) -> complex:
    """Spherical Bessel function j_n(z).

    Examples
    --------
    >>> round(sph_bessel_j(0, 1.0).real, 15)
    0.841470984807897
    """
    n = _check_order(n)
    z = as_complex(z)
    return complex(_kernels.sph_jn_seq(n, np.array([z]))[0, n])


def sph_bessel_y(n: int, z) -> complex:
    """Spherical Neumann function y_n(z), ``z != 0``."""
    n = _check_order(n)
    z = as_complex(z)
    if z == 0:
        raise DomainError("y_n is singular at z = 0")
    return complex(_kernels.sph_jy_seq(n, np.array([z]))[1][0, n])


def sph_hankel(n: int, z) -> complex:
    """Spherical Hankel function h_n = j_n + i y_n."""
    n = _check_order(n)
    z = as_complex(z)
    if z == 0:
        raise DomainError("h_n is singular at z = 0")
    j, y = _kernels.sph_jy_seq(n, np.array([z]))
    return complex(j[0, n] + 1j * y[0, n])


@dataclass(frozen=True)
class RiccatiTriple:
    """Riccati function value, its z-derivative and the spherical base function."""

    value: complex
    derivative: complex
    base: complex


_FAMILIES = {"psi": "psi", "ψ": "psi", "chi": "chi", "χ": "chi", "xi": "xi", "ξ": "xi"}


def _family(name: str) -> str:
    try:
        return _FAMILIES[name]
    except KeyError:
        raise DomainError(f"unknown Riccati family {name!r}") from None


def riccati_arrays(family: str, n: int, z):
    """Vectorized Riccati value and derivative for the base family at ``z``.

    Returns ``(value, derivative, base)`` arrays.  The derivative uses
    F_n'(z) = z f_{n-1}(z) - n f_n(z), with f_{-1} = cos z / z for j,
    sin z / z for y.
    """
    fam = _family(family)
    n = _check_order(n)
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if fam != "psi" and np.any(z == 0):
        raise DomainError("chi_n and xi_n are singular at z = 0")
    j, y = _kernels.sph_jy_seq(n, z) if fam != "psi" else (_kernels.sph_jn_seq(n, z), None)
    if fam == "psi":
        f = j
        zfm1 = np.cos(z)
    elif fam == "chi":
        f = y
        zfm1 = np.sin(z)
    else:
        f = j + 1j * y
        zfm1 = np.exp(1j * z)
    base = f[:, n]
    zf_prev = zfm1 if n == 0 else z * f[:, n - 1]
    return z * base, zf_prev - n * base, base


def riccati(family: str, n: int, z) -> RiccatiTriple:
    """Riccati-Bessel psi_n = z j_n, Riccati-Neumann chi_n = z y_n, or xi_n = z h_n.

    Parameters
    ----------
    family : {"psi", "chi", "xi"}
        Greek letters are accepted as aliases.
    n : int
        Non-negative order.
    z : complex
        Argument; must be non-zero for ``chi`` and ``xi``.
    """
    v, d, b = riccati_arrays(family, n, as_complex(z))
    return RiccatiTriple(complex(v[0]), complex(d[0]), complex(b[0]))


def _finite_or_raise(val: complex, what: str) -> complex:
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise OverflowRangeError(f"{what} overflows double precision; use scaled=True")
    return val


def mod_bessel_i(nu: float, z, scaled: bool = False) -> complex:
    """Modified Bessel function I_nu(z) of real order.

    With ``scaled=True`` returns ``exp(-|Re z|) I_nu(z)``, which stays finite
    for large arguments.
    """
    z = as_complex(z)
    nu = float(nu)
    if scaled:
        return _finite_or_raise(complex(sc.ive(nu, z)), "I")
    if abs(z.real) > 705:
        raise OverflowRangeError("I_nu(z) overflows for |Re z| > 705; use scaled=True")
    return _finite_or_raise(complex(sc.iv(nu, z)), "I")


def mod_bessel_k(nu: float, z, scaled: bool = False) -> complex:
    """Macdonald function K_nu(z) on the principal branch.

    With ``scaled=True`` returns ``exp(z) K_nu(z)``.
    """
    z = as_complex(z)
    if z.imag == 0 and z.real <= 0:
        raise DomainError("K_nu is not defined on the closed negative real axis")
    nu = float(nu)
    if scaled:
        return _finite_or_raise(complex(sc.kve(nu, z)), "K")
    return _finite_or_raise(complex(sc.kv(nu, z)), "K")


def mod_bessel_i_asymptotic(nu: float, z) -> complex:
    """Two-term large-argument form of I_nu, including the exp(-z) branch."""
    z = as_complex(z)
    c = (nu - 0.5) * (nu + 0.5) / (2.0 * z)
    pre = 1.0 / cmath.sqrt(2.0 * math.pi * z)
    return pre * (cmath.exp(z) * (1 - c) + cmath.exp(1j * (nu + 0.5) * math.pi - z) * (1 + c))


def bessel_j(nu: float, z):
    """Cylindrical J_nu at real order, vectorized over complex ``z``."""
    return sc.jv(nu, np.asarray(z, dtype=complex))


def bessel_y(nu: float, z):
    """Cylindrical Y_nu at real order, vectorized over complex ``z``."""
    return sc.yv(nu, np.asarray(z, dtype=complex))


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for real ``x > 0``."""
    x = float(x)
    if not x > 0:
        raise DomainError("log_gamma requires x > 0")
    return math.lgamma(x)
