"""Associated Bessel functions h_{-1,b} and H_{-1,n}.

Both functions are only needed at the argument -1/(2a), with a = eta/(Kk)
(complex when the wavenumbers are).  Writing x = -1/a,

    h_{-1,b}(-1/(2a)) = -exp(1/(2a)) / b^2 * 2F2(1/2, 1; 1-b, 1+b; x),

and the hypergeometric factor has the exact integral form

    2F2(1/2, 1; 1-b, 1+b; x) = 2 b / sin(pi b) * int_0^{pi/2} cos(2bt) exp(x cos^2 t) dt,

so the evaluation never has to sum an alternating series with huge terms.
For |x| <= 8 the series is summed directly (compensated, with a
cancellation monitor); beyond that the angular integral is used.

The shifted series of the acceleration scheme (``accel_sum``), the optimal
shift ``alpha_opt`` and the Gaussian-peak difference estimate
``diff_estimate`` are provided for analysis and testing.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from . import _kernels
from .errors import AccuracyLossError, DomainError, OrderError, OverflowRangeError
from .oracle import QuadratureConfig, quad_finite

__all__ = [
    "h_minus1",
    "h_minus1_scaled",
    "H_minus1_int",
    "H_minus1_int_scaled",
    "accel_sum",
    "accel_pair_sum",
    "alpha_opt",
    "diff_estimate",
    "SERIES_LIMIT",
]

#: |1/a| at or below which the series is summed directly.
SERIES_LIMIT = 8.0
_CANCEL_LIMIT = 1e8
_INTEGER_TOL = 1e-9
_TIGHT = QuadratureConfig(rel_tol=1e-14, abs_tol=1e-300, max_intervals=2000)


def _check_b(b: float) -> float:
    b = float(b)
    if not math.isfinite(b):
        raise DomainError("order must be finite")
    if abs(b - round(b)) < _INTEGER_TOL:
        raise OrderError(
            f"h_(-1,b) is singular at integer order b={b:g}; use H_minus1_int"
        )
    return abs(b)  # symmetric in b -> -b


def _check_a(a) -> complex:
    a = complex(a)
    if a == 0 or not (math.isfinite(a.real) and math.isfinite(a.imag)):
        raise DomainError("a must be finite and non-zero")
    if a.imag == 0 and a.real < 0:
        raise DomainError("a must not lie on the negative real axis")
    return a


def _sin_pi(b: float) -> float:
    # exact zeros and unit values at half-integers
    r = b - 2.0 * math.floor(b / 2.0)
    if r == 0.5:
        return 1.0
    if r == 1.5:
        return -1.0
    m = round(b)
    return (-1.0 if m % 2 else 1.0) * math.sin(math.pi * (b - m))


def _angular(b: float, x: complex) -> complex:
    """(2/sqrt(pi)) * int_0^{pi/2} cos(2 b t) exp(x cos^2 t) dt."""

    def f(t):
        return np.cos(2.0 * b * t) * np.exp(x * np.cos(t) ** 2)

    # Concentrate panels near pi/2 where the integrand lives when Re x << 0.
    s = 1.0 / math.sqrt(max(abs(x), 1.0))
    bps = [math.pi / 2 - c * s for c in (8.0, 4.0, 2.0, 1.0, 0.5) if c * s < math.pi / 2]
    res = quad_finite(f, 0.0, math.pi / 2, _TIGHT, breakpoints=bps)
    return res.regular * 2.0 / math.sqrt(math.pi)


def _reduced(b: float, x: complex) -> complex:
    """The hypergeometric factor 2F2(1/2, 1; 1-b, 1+b; x)."""
    if abs(x) <= SERIES_LIMIT:
        s, peak, _ = _kernels.assoc_series(b, x, 4000)
        if s == 0 or peak / abs(s) > _CANCEL_LIMIT:
            raise AccuracyLossError(
                f"series cancellation: peak partial sum {peak:.3g} vs result {abs(s):.3g}"
            )
        return s
    # 2F2 = b sqrt(pi) / sin(pi b) * S(b, x), S the angular integral.
    return b * math.sqrt(math.pi) / _sin_pi(b) * _angular(b, x)


def h_minus1_scaled(b: float, a) -> complex:
    """``exp(-1/(2a)) * h_{-1,b}(-1/(2a))``, free of the exponential factor.

    Parameters
    ----------
    b : float
        Non-integer order (half-integers included); the function is even in b.
    a : complex
        Argument parameter, ``a = eta / (K k)``.
    """
    b = _check_b(b)
    a = _check_a(a)
    return -_reduced(b, -1.0 / a) / (b * b)


def h_minus1(b: float, a) -> complex:
    """Associated Bessel function h_{-1,b}(-1/(2a)).

    Raises
    ------
    OrderError
        For integer ``b``.
    AccuracyLossError
        If the direct series lost more than 8 digits to cancellation.
    OverflowRangeError
        If ``exp(1/(2a))`` overflows (use :func:`h_minus1_scaled`).
    """
    a = _check_a(a)
    sc = h_minus1_scaled(b, a)
    e = 1.0 / (2.0 * a)
    if e.real > 709:
        raise OverflowRangeError("exp(1/(2a)) overflows; use h_minus1_scaled")
    return cmath.exp(e) * sc


def H_minus1_int_scaled(n: int, a, max_terms: int | None = None) -> complex:
    """``exp(-1/(2a)) * H_{-1,n}(-1/(2a))`` from the terminating series.

    For ``n >= 1`` the series stops after ``n`` terms because the factor
    (m^2 - n^2) vanishes.  For ``n = 0`` it does not terminate and is only
    asymptotic in small ``a``; ``max_terms`` (default 5) truncates it.
    """
    if int(n) != n or n < 0:
        raise DomainError("n must be a non-negative integer")
    n = int(n)
    a = _check_a(a)
    if max_terms is None:
        max_terms = n if n >= 1 else 5
    total = 0j
    term = 1.0 + 0j
    for m in range(max_terms):
        total += term
        # next: (2a)^{m+1}/(2m+3)!! * prod_{j<=m+1}(j^2 - n^2)
        term = term * (2.0 * a) * ((m + 1) ** 2 - n * n) / (2 * m + 3)
        if term == 0:
            break
    return -2.0 * a * total


def H_minus1_int(n: int, a, max_terms: int | None = None) -> complex:
    """Integer-order companion H_{-1,n}(-1/(2a)); see :func:`H_minus1_int_scaled`."""
    a = _check_a(a)
    return cmath.exp(1.0 / (2.0 * a)) * H_minus1_int_scaled(n, a, max_terms)


def alpha_opt(b: float) -> float:
    """Shift that removes the 1/l correction of the large-l term expansion."""
    return 2.0 * b * b + 0.25


def _accel_integral(kernel, x: float, alpha: float) -> float:
    T = math.sqrt((abs(x) + 45.0) / alpha)

    def f(t):
        return kernel(x * np.exp(-t * t)) * np.exp(-alpha * t * t)

    cfg = QuadratureConfig(rel_tol=1e-13, abs_tol=1e-300)
    bps = [min(T / 2, 1.0 / math.sqrt(max(abs(x), 1.0)))]
    return (quad_finite(f, 0.0, T, cfg, breakpoints=bps).regular * 2.0 / math.sqrt(math.pi)).real


def accel_sum(parity: str, x: float, alpha: float) -> float:
    """Even or odd half of the shifted series sum_l x^l / (l! sqrt(l + alpha)).

    Computed from
    ``(2/sqrt(pi)) * int_0^inf cosh(x e^{-t^2}) e^{-alpha t^2} dt`` (even)
    or the same with ``sinh`` (odd).
    """
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    x = float(x)
    if parity == "even":
        return _accel_integral(np.cosh, x, alpha)
    if parity == "odd":
        if x == 0:
            return 0.0
        return _accel_integral(np.sinh, x, alpha)
    raise DomainError("parity must be 'even' or 'odd'")


def accel_pair_sum(x: float, alpha: float) -> float:
    """Even plus odd halves evaluated jointly, avoiding their cancellation."""
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    return _accel_integral(np.exp, float(x), alpha)


def diff_estimate(x: float, alpha: float) -> float:
    """Gaussian-peak estimate of |even + odd| at argument -x, for x > alpha."""
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    if not x > alpha:
        raise DomainError("diff_estimate requires x > alpha")
    L = math.log(x / alpha)
    return 2.0 * math.exp(-alpha * (1.0 + L)) / math.sqrt(2.0 * alpha * L)
