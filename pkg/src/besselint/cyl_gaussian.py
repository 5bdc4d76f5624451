"""Gaussian-damped cylindrical Bessel product integrals.

All integrals have the form ``int_0^inf x exp(-eta x^2) C_b(Kx) D_b(kx) dx``
with C, D drawn from J_b, Y_b, J_{-b}.  The closed forms combine

* E I_b(w), with E = exp(-(K^2+k^2)/(4 eta)) and w = K k / (2 eta),
* the finite-range integral calH and its folded form,
* the associated Bessel function h_{-1,b} (or H_{-1,n} and K_n at integer
  order).

The factors E and exp(w) overflow separately long before their product does,
so every product is assembled with its exponentials folded together (see
``_gexp``).

Convention: ``calH(b, K, k, eta)`` integrates u^{b-1} exp[(Kk/4eta)(u+1/u)]
from 1 to K/k.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import special as sc

from .assoc_bessel import H_minus1_int_scaled, h_minus1_scaled
from .errors import (
    DegenerateError,
    DivergenceError,
    DomainError,
    OrderError,
    OverflowRangeError,
    PathError,
)
from .oracle import QuadratureConfig, quad_finite
from .types import GaussKind, GaussianIntegralSpec, as_complex

__all__ = [
    "calH",
    "calH_folded",
    "small_eta_hatH",
    "int_JJ",
    "int_JY",
    "int_JJm",
    "int_JmJ",
    "int_YY",
    "int_JmY",
    "int_JYm",
    "evaluate",
    "jy_integer_special_case",
    "INTEGER_TOL",
]

INTEGER_TOL = 1e-9
_CALH_CFG = QuadratureConfig(rel_tol=1e-12, abs_tol=1e-300, max_intervals=2000)
_EXP_MAX = 700.0
_EXP_MIN = -745.0


def _gexp(z: complex) -> complex:
    """Guarded complex exponential: overflow raises, deep underflow gives 0."""
    if z.real > _EXP_MAX:
        raise OverflowRangeError(f"exponent {z.real:.4g} exceeds the double range")
    if z.real < _EXP_MIN:
        return 0j
    return cmath.exp(z)


def _trig(b: float):
    """(sin(pi b), cos(pi b)) with exact values at half-integers."""
    twice = 2.0 * b
    if twice == round(twice) and round(twice) % 2 == 1:
        m = (round(twice) - 1) // 2  # b = m + 1/2
        return (1.0 if m % 2 == 0 else -1.0), 0.0
    # reduce to the nearest integer first; b - m is exact, so sin(pi b)
    # keeps full relative accuracy next to the integers
    m = round(b)
    r = b - m
    sign = -1.0 if m % 2 else 1.0
    return sign * math.sin(math.pi * r), sign * math.cos(math.pi * r)


def _is_integer(b: float) -> bool:
    return abs(b - round(b)) < INTEGER_TOL


def _args(K, k, eta):
    K = as_complex(K)
    k = as_complex(k)
    eta = float(eta)
    if not eta > 0:
        raise DomainError("eta must be positive")
    if K == 0 or k == 0:
        raise DomainError("wavenumbers must be non-zero")
    if K + k == 0:
        raise DomainError("K + k = 0 is excluded")
    return K, k, eta


# ---------------------------------------------------------------------------
# folded building blocks
# ---------------------------------------------------------------------------


def _EI(nu: float, K: complex, k: complex, eta: float) -> complex:
    """E * I_nu(w) assembled from the scaled Bessel function."""
    w = K * k / (2.0 * eta)
    s = complex(sc.ive(nu, w))  # exp(-|Re w|) I_nu(w)
    return _gexp(-(K * K + k * k) / (4.0 * eta) + abs(w.real)) * s


def _EK(n: float, K: complex, k: complex, eta: float) -> complex:
    """E * K_n(w), folded to exp(-(K+k)^2/(4 eta)) * kve."""
    w = K * k / (2.0 * eta)
    if w.imag == 0 and w.real <= 0:
        raise DomainError("K_n argument on the negative real axis")
    s = complex(sc.kve(n, w))
    return _gexp(-((K + k) ** 2) / (4.0 * eta)) * s


def _Eh(b: float, K: complex, k: complex, eta: float) -> complex:
    """E * h_{-1,b}(-Kk/(2 eta))."""
    a = eta / (K * k)
    return _gexp(-((K - k) ** 2) / (4.0 * eta)) * h_minus1_scaled(b, a)


def _EH(n: int, K: complex, k: complex, eta: float, max_terms=None) -> complex:
    a = eta / (K * k)
    return _gexp(-((K - k) ** 2) / (4.0 * eta)) * H_minus1_int_scaled(n, a, max_terms)


# ---------------------------------------------------------------------------
# finite-range integral
# ---------------------------------------------------------------------------


def _path(K: complex, k: complex):
    """Straight segment u(t) = 1 + t (K/k - 1), t in [0, 1]."""
    if K == k:
        # complex K/K need not round to exactly 1
        return 1.0 + 0j, 0j
    r = K / k
    d = r - 1.0
    if d == 0:
        return r, d
    # u = 0 on the segment iff r is real and negative
    if abs(r.imag) <= 1e-15 * abs(r) and r.real <= 0:
        raise PathError("the segment from 1 to K/k passes through u = 0")
    return r, d


def _segment_integral(b, K, k, eta, exponent_fn, breakpoints=None) -> complex:
    r, d = _path(K, k)
    if d == 0:
        return 0j

    def f(t):
        u = 1.0 + t * d
        return np.exp((b - 1.0) * np.log(u) + exponent_fn(u)) * d

    # overflow guard on a coarse sample of the exponent
    ts = np.linspace(0.0, 1.0, 65)
    peak = np.max(exponent_fn(1.0 + ts * d).real)
    if peak > _EXP_MAX:
        raise OverflowRangeError(
            "calH integrand overflows along the path; use calH_folded"
        )
    return quad_finite(f, 0.0, 1.0, _CALH_CFG, breakpoints=breakpoints).regular


def calH(b: float, K, k, eta: float) -> complex:
    """Finite-range integral ``int_1^{K/k} u^{b-1} exp[(Kk/4eta)(u + 1/u)] du``.

    The path is the straight segment from 1 to K/k with the principal branch
    of u^{b-1}.  Satisfies ``calH(b, K, k) = -calH(-b, k, K)``.

    Raises
    ------
    PathError
        If the segment passes through u = 0.
    OverflowRangeError
        If the integrand exceeds the double range (use :func:`calH_folded`).
    """
    K, k, eta = _args(K, k, eta)
    c = K * k / (4.0 * eta)
    return _segment_integral(float(b), K, k, eta, lambda u: c * (u + 1.0 / u))


def _fold_breakpoints(K, k, eta):
    # the folded integrand is concentrated near t = 1 on a scale ~ eta/|K^2-k^2|
    scale = eta / max(abs(K * K - k * k), 1e-300) * 4.0
    pts = []
    s = scale
    while s < 0.5 and len(pts) < 40:
        pts.append(1.0 - s)
        s *= 3.0
    return pts


def calH_folded(b: float, K, k, eta: float) -> complex:
    """Folded finite-range integral, ``-exp(-(K^2+k^2)/4eta) / (2 pi eta) * calH``.

    The prefactor exponential is moved inside, where the exponent
    (Kk(u + 1/u) - K^2 - k^2)/(4 eta) vanishes at u = K/k and is
    -(K-k)^2/(4 eta) at u = 1, so nothing overflows as eta -> 0.
    """
    K, k, eta = _args(K, k, eta)
    c = K * k / (4.0 * eta)
    s = (K * K + k * k) / (4.0 * eta)
    val = _segment_integral(
        float(b), K, k, eta, lambda u: c * (u + 1.0 / u) - s, _fold_breakpoints(K, k, eta)
    )
    return -val / (2.0 * math.pi * eta)


def small_eta_hatH(b: float, K, k, eta: float) -> complex:
    """Two-term small-eta expansion of :func:`calH_folded`.

    ``2 r^b / (pi (k^2 - K^2)) + 8 eta (b k^2 - b K^2 + k^2 + K^2) r^b / (pi (k^2 - K^2)^3)``
    with ``r = K/k``.
    """
    K = as_complex(K)
    k = as_complex(k)
    d = k * k - K * K
    if abs(d) <= 1e-12 * max(abs(K), abs(k)) ** 2:
        raise DegenerateError("small-eta expansion is singular at K^2 = k^2")
    rb = (K / k) ** b
    return 2.0 * rb / (math.pi * d) + 8.0 * eta * (b * k * k - b * K * K + k * k + K * K) * rb / (
        math.pi * d**3
    )


# ---------------------------------------------------------------------------
# cores with signed order (used by the -b relations)
# ---------------------------------------------------------------------------


def _jy_core(b: float, K, k, eta) -> complex:
    """I_JY at non-integer signed order b."""
    s, c = _trig(b)
    cot = c / s
    val = calH_folded(b, K, k, eta)
    extra = b * _Eh(b, K, k, eta)
    if cot != 0:
        extra += math.pi * cot * _EI(b, K, k, eta)
    return val + extra / (2.0 * math.pi * eta)


def _yy_core(b: float, K, k, eta) -> complex:
    """I_YY at non-integer signed order b (analytic in b)."""
    s, c = _trig(b)
    val = _EI(-b, K, k, eta) / (s * s) / (2.0 * eta)
    if c != 0:
        cot = c / s
        val += cot * cot * _EI(b, K, k, eta) / (2.0 * eta)
        val += cot * (calH_folded(b, K, k, eta) + calH_folded(b, k, K, eta))
        val += cot * b * _Eh(b, K, k, eta) / (math.pi * eta)
    return val


def _jy_integer(n: int, K, k, eta, max_terms=None) -> complex:
    val = calH_folded(float(n), K, k, eta)
    bracket = -((-1) ** n) * _EK(n, K, k, eta)
    if n:
        bracket += n * _EH(n, K, k, eta, max_terms)
    return val + bracket / (2.0 * math.pi * eta)


# ---------------------------------------------------------------------------
# public integrals
# ---------------------------------------------------------------------------


def _order(b) -> float:
    b = float(b)
    if not b >= 0 or not math.isfinite(b):
        raise DomainError("order b must be a finite non-negative real")
    return b


def int_JJ(b: float, K, k, eta: float) -> complex:
    """``int_0^inf x e^{-eta x^2} J_b(Kx) J_b(kx) dx = E I_b(w) / (2 eta)``."""
    b = _order(b)
    K, k, eta = _args(K, k, eta)
    return _EI(b, K, k, eta) / (2.0 * eta)


def int_JY(b: float, K, k, eta: float) -> complex:
    """``int_0^inf x e^{-eta x^2} J_b(Kx) Y_b(kx) dx``.

    Orders within 1e-9 of an integer use the H_{-1,n} / K_n route.
    """
    b = _order(b)
    K, k, eta = _args(K, k, eta)
    if _is_integer(b):
        return _jy_integer(int(round(b)), K, k, eta)
    return _jy_core(b, K, k, eta)


def _nonint(b: float, what: str) -> float:
    b = _order(b)
    if _is_integer(b):
        raise OrderError(f"{what} requires a non-integer order, got b={b:g}")
    return b


def int_JJm(b: float, K, k, eta: float) -> complex:
    """``int_0^inf x e^{-eta x^2} J_b(Kx) J_{-b}(kx) dx`` for non-integer b."""
    b = _nonint(b, "I_JJm")
    K, k, eta = _args(K, k, eta)
    s, _ = _trig(b)
    return s * (-calH_folded(b, K, k, eta) - b * _Eh(b, K, k, eta) / (2.0 * math.pi * eta))


def int_JmJ(b: float, K, k, eta: float) -> complex:
    """``int_0^inf x e^{-eta x^2} J_{-b}(Kx) J_b(kx) dx`` for non-integer b."""
    b = _nonint(b, "I_JmJ")
    K, k, eta = _args(K, k, eta)
    s, _ = _trig(b)
    return s * (-calH_folded(b, k, K, eta) - b * _Eh(b, K, k, eta) / (2.0 * math.pi * eta))


def _converging(b: float, what: str):
    if b >= 1:
        raise DivergenceError(
            f"{what} diverges at the lower limit for b >= 1 (integrand ~ x^(1-2b))"
        )


def int_YY(b: float, K, k, eta: float) -> complex:
    """``int_0^inf x e^{-eta x^2} Y_b(Kx) Y_b(kx) dx`` for non-integer 0 < b < 1."""
    b = _nonint(b, "I_YY")
    _converging(b, "I_YY")
    K, k, eta = _args(K, k, eta)
    return _yy_core(b, K, k, eta)


def int_JmY(b: float, K, k, eta: float) -> complex:
    """``int_0^inf x e^{-eta x^2} J_{-b}(Kx) Y_b(kx) dx`` for non-integer 0 < b < 1."""
    b = _nonint(b, "I_JmY")
    _converging(b, "I_JmY")
    K, k, eta = _args(K, k, eta)
    s, c = _trig(b)
    val = -s * _yy_core(b, K, k, eta)
    if c != 0:
        val += c * _jy_core(b, K, k, eta)
    return val


def int_JYm(b: float, K, k, eta: float) -> complex:
    """``int_0^inf x e^{-eta x^2} J_b(Kx) Y_{-b}(kx) dx`` for non-integer b."""
    b = _nonint(b, "I_JYm")
    K, k, eta = _args(K, k, eta)
    s, c = _trig(b)
    val = s * _yy_core(-b, K, k, eta)
    if c != 0:
        val += c * _jy_core(-b, K, k, eta)
    return val


_DISPATCH = {
    GaussKind.JJ: int_JJ,
    GaussKind.JY: int_JY,
    GaussKind.YY: int_YY,
    GaussKind.JJm: int_JJm,
    GaussKind.JmJ: int_JmJ,
    GaussKind.JmY: int_JmY,
    GaussKind.JYm: int_JYm,
}


def evaluate(spec: GaussianIntegralSpec) -> complex:
    """Evaluate the integral described by ``spec`` analytically."""
    return _DISPATCH[GaussKind(spec.kind)](spec.order, spec.K, spec.k, spec.eta)


def jy_integer_special_case(n: int, a: float) -> float:
    """``int_0^inf x e^{-a x^2} J_n(x) Y_n(x) dx`` from its displayed K_n form, n <= 3.

    These are the integer-order formula at K = k = 1 written out with the
    terminating polynomial in ``a``.
    """
    a = float(a)
    if not a > 0:
        raise DomainError("a must be positive")
    z = 1.0 / (2.0 * a)
    kterm = math.exp(-2.0 * z) * float(sc.kve(n, z)) / (2.0 * math.pi * a)
    if n == 0:
        return -kterm
    if n == 1:
        return -1.0 / math.pi + kterm
    if n == 2:
        return -2.0 / math.pi * (1.0 - 2.0 * a) - kterm
    if n == 3:
        return -3.0 / math.pi * (1.0 - 16.0 / 3.0 * a + 32.0 / 3.0 * a * a) + kterm
    raise DomainError("special cases are tabulated for n = 0..3 only")
