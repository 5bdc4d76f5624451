"""Closed-form radial integrals for resonant-state normalization.

Two integrand types are covered, for spherical function families
c, d in {j, y, h} with Riccati forms C(z) = z c(z):

* M type: ``x^2 c_n(Kx) d_n(kx)``
* N type: ``[n(n+1) c_n(Kx) d_n(kx) + C_n'(Kx) D_n'(kx)] / (K k)``

For K != k both have elementary antiderivatives in Riccati form (the
Watson form is an equivalent rewriting for M type).  For K = k separate
equal-argument antiderivatives are used.  The equal-argument ones are
written symmetrically in C and D so that their boundary terms have zero mean
at infinity; the Abel/Gaussian-regularized value on [R, inf) is then
minus the value at R.

On [R, inf) the jj and yy integrals also carry ``pi/(2Kk) delta(K-k)``, kept
symbolic in :class:`~besselint.types.DistributionalValue`; for jy and hh the
delta terms cancel.
"""

from __future__ import annotations

import math

import numpy as np

from ._kernels import sph_jy_seq
from .errors import DegenerateError, DomainError
from .types import (
    DistributionalValue,
    EvalResult,
    FieldType,
    Interval,
    Method,
    Pair,
    RadialIntegralSpec,
    as_complex,
)

__all__ = [
    "watson_antiderivative",
    "riccati_antiderivative",
    "equal_antiderivative",
    "lower_value",
    "radial_M",
    "radial_M_equal",
    "radial_N",
    "radial_N_equal",
    "evaluate_radial",
    "delta_coefficient",
    "hankel_combination",
    "DEGENERATE_TOL",
    "BLEND_TOL",
]

DEGENERATE_TOL = 1e-8
BLEND_TOL = 1e-5
_ROUNDOFF = 1e-14

_PAIR_FAMILIES = {
    Pair.jj: ("j", "j"),
    Pair.yy: ("y", "y"),
    Pair.jy: ("j", "y"),
    Pair.hh: ("h", "h"),
}


def _funcs(fam: str, n: int, z: complex):
    """(f_n, f_{n+1}, F_n, F_n') at z for family j, y or h."""
    z = complex(z)
    if fam != "j" and z == 0:
        raise DomainError(f"{fam}_n is singular at the origin")
    js, ys = sph_jy_seq(n + 1, np.array([z]))
    j = js[0]
    y = ys[0]
    if fam == "j":
        f = j
        zfm1 = np.cos(z)
    elif fam == "y":
        f = y
        zfm1 = np.sin(z)
    elif fam == "h":
        f = j + 1j * y
        zfm1 = np.exp(1j * z)
    else:
        raise DomainError(f"unknown family {fam!r}")
    fn = complex(f[n])
    F = z * fn
    Fp = complex(zfm1) if n == 0 else z * complex(f[n - 1]) - n * fn
    if fam == "j" and z == 0:
        F = 0j
        Fp = 1.0 + 0j if n == 0 else 0j
    return fn, complex(f[n + 1]), F, Fp


def watson_antiderivative(famC: str, famD: str, n: int, K, k, z: float) -> complex:
    """``z^2 [K c_{n+1}(Kz) d_n(kz) - k c_n(Kz) d_{n+1}(kz)] / (K^2 - k^2)``.

    An antiderivative of ``z^2 c_n(Kz) d_n(kz)`` for K^2 != k^2.
    """
    K = as_complex(K)
    k = as_complex(k)
    if abs(K * K - k * k) <= 1e-14 * max(abs(K), abs(k)) ** 2:
        raise DegenerateError("Watson form requires K^2 != k^2")
    c0, c1, _, _ = _funcs(famC, n, K * z)
    d0, d1, _, _ = _funcs(famD, n, k * z)
    return z * z * (K * c1 * d0 - k * c0 * d1) / (K * K - k * k)


def riccati_antiderivative(ftype, famC: str, famD: str, n: int, K, k, x: float) -> complex:
    """Riccati-form antiderivative for K != k.

    M type: ``[k C(Kx) D'(kx) - K C'(Kx) D(kx)] / (K k (K^2 - k^2))``;
    N type: ``[K C(Kx) D'(kx) - k C'(Kx) D(kx)] / (K k (K^2 - k^2))``.
    """
    ftype = FieldType(ftype)
    K = as_complex(K)
    k = as_complex(k)
    _, _, C, Cp = _funcs(famC, n, K * x)
    _, _, D, Dp = _funcs(famD, n, k * x)
    den = K * k * (K * K - k * k)
    if ftype is FieldType.M:
        return (k * C * Dp - K * Cp * D) / den
    return (K * C * Dp - k * Cp * D) / den


def equal_antiderivative(ftype, famC: str, famD: str, n: int, k, x: float) -> complex:
    """Antiderivative at K = k, symmetric in the two families.

    ``x/(2k^2) [C'D' + CD - n(n+1) c d] -/+ (C D' + C' D)/(4 k^3)``
    with the minus sign for M type and plus for N type.
    """
    ftype = FieldType(ftype)
    k = as_complex(k)
    c, _, C, Cp = _funcs(famC, n, k * x)
    d, _, D, Dp = _funcs(famD, n, k * x)
    main = x / (2.0 * k * k) * (Cp * Dp + C * D - n * (n + 1) * c * d)
    cross = (C * Dp + Cp * D) / (4.0 * k**3)
    return main - cross if ftype is FieldType.M else main + cross


def lower_value(ftype, famC: str, famD: str, n: int, K, k, equal: bool = False) -> complex:
    """Limit of the antiderivative at x -> 0+ where the integral converges there."""
    ftype = FieldType(ftype)
    K = as_complex(K)
    k = as_complex(k)
    pair = (famC, famD)
    if pair == ("j", "j"):
        return 0j
    if pair not in (("j", "y"), ("y", "j")):
        raise DomainError(f"{famC}{famD} integrals do not converge at the origin")
    if equal:
        if ftype is FieldType.M:
            return (2 * n + 1) / (4.0 * k**3)
        return ((2 * n + 1) ** 2 - 2) / (4.0 * (2 * n + 1) * k**3)
    d = K * K - k * k
    if ftype is FieldType.M:
        if pair == ("j", "y"):
            return K**n / (k ** (n + 1) * d)
        return -(k**n) / (K ** (n + 1) * d)
    if pair == ("j", "y"):
        return K ** (n - 1) * (n * K * K + (n + 1) * k * k) / ((2 * n + 1) * k ** (n + 2) * d)
    return -(k ** (n - 1)) * ((n + 1) * K * K + n * k * k) / ((2 * n + 1) * K ** (n + 2) * d)


def delta_coefficient(pair, field_type, K, k) -> complex:
    """Coefficient of delta(K-k) on [R, inf): pi/(2Kk) for jj and yy, else 0."""
    pair = Pair(pair)
    FieldType(field_type)
    if pair in (Pair.jj, Pair.yy):
        return math.pi / (2.0 * as_complex(K) * as_complex(k))
    return 0j


def _check_interval(spec: RadialIntegralSpec):
    iv = spec.interval
    if spec.pair in (Pair.yy, Pair.hh) and iv.lo <= 0:
        raise DomainError(
            f"{spec.pair.value} integrals need a lower bound R > 0 (singular at the origin)"
        )


def _integral(ftype, famC, famD, n, K, k, iv: Interval, equal: bool) -> complex:
    def F(x):
        if equal:
            return equal_antiderivative(ftype, famC, famD, n, k, x)
        return riccati_antiderivative(ftype, famC, famD, n, K, k, x)

    if iv.lo == 0:
        lo = lower_value(ftype, famC, famD, n, K, k, equal)
    else:
        lo = F(iv.lo)
    hi = 0j if iv.infinite else F(iv.hi)
    return hi - lo


def _regular(spec: RadialIntegralSpec, equal: bool) -> complex:
    famC, famD = _PAIR_FAMILIES[spec.pair]
    return _integral(spec.field_type, famC, famD, spec.n, spec.K, spec.k, spec.interval, equal)


def _delta(spec: RadialIntegralSpec, equal: bool) -> complex:
    if not spec.interval.infinite:
        return 0j
    k2 = spec.k * spec.k if equal else spec.K * spec.k
    return math.pi / (2.0 * k2) if spec.pair in (Pair.jj, Pair.yy) else 0j


def _separation(spec: RadialIntegralSpec) -> float:
    return abs(spec.K - spec.k) / max(abs(spec.K), abs(spec.k))


def _continuous_at_equal(spec: RadialIntegralSpec) -> bool:
    # The mixed jy integral to infinity has a pole at K = k.
    return not (spec.pair is Pair.jy and spec.interval.infinite)


def _unequal(spec: RadialIntegralSpec, ftype: FieldType) -> EvalResult:
    if spec.field_type is not ftype:
        raise DomainError(f"expected a {ftype.value}-type spec")
    _check_interval(spec)
    sep = _separation(spec)
    if sep <= DEGENERATE_TOL:
        raise DegenerateError(
            "K and k coincide to tolerance; use the equal-argument form",
            delta_coeff=_delta(spec, True),
        )
    reg = _regular(spec, False)
    value = DistributionalValue(reg, _delta(spec, False))
    err = _ROUNDOFF * abs(reg)
    notes = ""
    if sep <= BLEND_TOL and _continuous_at_equal(spec):
        alt = _regular(spec, True)
        err = max(err, abs(reg - alt))
        notes = "near-degenerate: error from equal-argument comparison"
    return EvalResult(value, Method.closed_form, err, notes)


def _equal(spec: RadialIntegralSpec, ftype: FieldType) -> EvalResult:
    if spec.field_type is not ftype:
        raise DomainError(f"expected a {ftype.value}-type spec")
    _check_interval(spec)
    if _separation(spec) > BLEND_TOL:
        raise DomainError("equal-argument form requires K = k")
    reg = _regular(spec, True)
    return EvalResult(
        DistributionalValue(reg, _delta(spec, True)),
        Method.equal_arg_limit,
        _ROUNDOFF * abs(reg),
    )


def radial_M(spec: RadialIntegralSpec) -> EvalResult:
    """M-type integral ``int x^2 c_n(Kx) d_n(kx) dx`` for K != k."""
    return _unequal(spec, FieldType.M)


def radial_M_equal(spec: RadialIntegralSpec) -> EvalResult:
    """M-type integral at K = k (``spec.k`` is used as the common wavenumber)."""
    return _equal(spec, FieldType.M)


def radial_N(spec: RadialIntegralSpec) -> EvalResult:
    """N-type integral ``int [n(n+1) c d + C' D'] / (K k) dx`` for K != k."""
    return _unequal(spec, FieldType.N)


def radial_N_equal(spec: RadialIntegralSpec) -> EvalResult:
    """N-type integral at K = k."""
    return _equal(spec, FieldType.N)


def evaluate_radial(spec: RadialIntegralSpec) -> EvalResult:
    """Route to the unequal or equal-argument form by the degeneracy tolerance."""
    if _separation(spec) <= DEGENERATE_TOL:
        return _equal(spec, spec.field_type)
    return _unequal(spec, spec.field_type)


def hankel_combination(field_type, n: int, K, k, interval: Interval) -> DistributionalValue:
    """hh assembled as jj - yy + i (jy + yj) from the single-family closed forms."""
    ftype = FieldType(field_type)
    K = as_complex(K)
    k = as_complex(k)
    parts = {}
    for famC, famD in (("j", "j"), ("y", "y"), ("j", "y"), ("y", "j")):
        parts[famC + famD] = _integral(ftype, famC, famD, n, K, k, interval, False)
    reg = parts["jj"] - parts["yy"] + 1j * (parts["jy"] + parts["yj"])
    d = delta_coefficient(Pair.jj, ftype, K, k) if interval.infinite else 0j
    # delta terms: jj contributes +d, yy contributes -d; they cancel
    return DistributionalValue(reg, d - d)
