"""Hot numeric kernels with a numba path and a pure-numpy fallback.

The kernels here are the inner loops that dominate runtime when the
quadrature oracle samples Bessel-product integrands at thousands of nodes:
spherical Bessel sequences j_0..j_N and y_0..y_N at complex arguments, and
the compensated summation of the associated-Bessel series.

Backend selection
-----------------
Set ``BESSELINT_NUMBA=0`` (or ``false``/``off``/``no``) before import to force
the numpy path.  Otherwise numba is used when importable.  Both paths are
always importable by name (``*_numpy`` / ``*_numba``) so they can be
benchmarked and cross-checked against each other.
"""

from __future__ import annotations

import math
import os

import numpy as np

_FLAG = os.environ.get("BESSELINT_NUMBA", "1").strip().lower()
_WANT_NUMBA = _FLAG not in {"0", "false", "off", "no"}

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _WANT_NUMBA

# Miller recurrence rescaling threshold.
_BIG = 1e200
_SMALL_Z = 1.0
# Below this |z| the three-term power series is exact to double precision
# and Miller's (2m+1)/z factors would overflow.
_TINY_Z = 1e-3
# |Im z| above which y_n is built from the Wronskian instead of recurrence.
_WRONSKI_IM = 1.0


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _miller_start(nmax, absz):
    m = max(nmax, int(absz)) + 20 + int(math.sqrt(40.0 * max(nmax, absz, 1.0)))
    return m


# ---------------------------------------------------------------------------
# scalar algorithms (plain Python; compiled by numba when enabled)
# ---------------------------------------------------------------------------


def _jn_seq_scalar(nmax, z, out):
    """Fill ``out[0..nmax]`` with j_n(z)."""
    absz = abs(z)
    if absz == 0.0:
        out[0] = 1.0
        for m in range(1, nmax + 1):
            out[m] = 0.0
        return
    if absz < _TINY_Z:
        z2 = z * z
        t = 1.0 + 0.0j
        for m in range(nmax + 1):
            if m > 0:
                t = t * z / (2 * m + 1)
            a = 2.0 * m + 3.0
            out[m] = t * (1.0 - z2 / (2.0 * a) + z2 * z2 / (8.0 * a * (a + 2.0)))
        return
    s = np.sin(z)
    c = np.cos(z)
    if absz > 2 * nmax:
        out[0] = s / z
        if nmax >= 1:
            out[1] = s / (z * z) - c / z
        for m in range(1, nmax):
            out[m + 1] = (2 * m + 1) / z * out[m] - out[m - 1]
        return
    # Miller: downward from a high start, normalized against j_0 or j_1.
    mstart = max(nmax, int(absz)) + 20 + int(math.sqrt(40.0 * max(nmax, absz, 1.0)))
    fp1 = 0.0 + 0.0j
    f = 1e-30 + 0.0j
    for m in range(mstart, 0, -1):
        fm1 = (2 * m + 1) / z * f - fp1
        fp1 = f
        f = fm1
        if m - 1 <= nmax:
            out[m - 1] = f
        if abs(f) > _BIG:
            f *= 1.0 / _BIG
            fp1 *= 1.0 / _BIG
            for q in range(max(m - 1, 0), nmax + 1):
                out[q] *= 1.0 / _BIG
    j0 = s / z
    if absz < _SMALL_Z or nmax == 0:
        scale = j0 / out[0]
    else:
        j1 = s / (z * z) - c / z
        if abs(j0) >= abs(j1):
            scale = j0 / out[0]
        else:
            scale = j1 / out[1]
    for m in range(nmax + 1):
        out[m] *= scale


def _yn_seq_scalar(nmax, z, out, jseq):
    """Fill ``out[0..nmax]`` with y_n(z).

    Near the real axis plain upward recurrence is stable.  Further off it
    y_n can turn recessive over a band of orders, so the Wronskian
    j_{n+1} y_n - j_n y_{n+1} = 1/z^2 is stepped instead, using the Miller
    values of j_n (which has no zeros off the real axis).
    """
    s = np.sin(z)
    c = np.cos(z)
    out[0] = -c / z
    if abs(z.imag) < _WRONSKI_IM:
        if nmax >= 1:
            out[1] = -c / z / z - s / z
        for m in range(1, nmax):
            out[m + 1] = (2 * m + 1) / z * out[m] - out[m - 1]
        return
    w = 1.0 / z / z
    for m in range(nmax):
        out[m + 1] = (jseq[m + 1] * out[m] - w) / jseq[m]


def _series_scalar(b, x, max_terms):
    """Neumaier-compensated sum of the reduced associated-Bessel series.

    Returns (sum, max |partial sum|, terms used).  The series is
    sum_l r_l with r_0 = 1, r_{l+1} = r_l x (l + 1/2) / ((l + 1 - b)(l + 1 + b)).
    """
    sr = 0.0
    si = 0.0
    cr = 0.0
    ci = 0.0
    t = 1.0 + 0.0j
    peak = 0.0
    used = 0
    for l in range(max_terms):
        tr = t.real
        ti = t.imag
        # Neumaier on each component.
        u = sr + tr
        if abs(sr) >= abs(tr):
            cr += (sr - u) + tr
        else:
            cr += (tr - u) + sr
        sr = u
        u = si + ti
        if abs(si) >= abs(ti):
            ci += (si - u) + ti
        else:
            ci += (ti - u) + si
        si = u
        mag = math.hypot(sr + cr, si + ci)
        if mag > peak:
            peak = mag
        used = l + 1
        if abs(t) <= 1e-17 * mag and l > abs(x):
            break
        t = t * x * (l + 0.5) / ((l + 1.0 - b) * (l + 1.0 + b))
    return complex(sr + cr, si + ci), peak, used


# ---------------------------------------------------------------------------
# numpy path
# ---------------------------------------------------------------------------


def sph_jn_seq_numpy(nmax: int, z) -> np.ndarray:
    """Vectorized j_0..j_nmax at every element of ``z`` (shape (len(z), nmax+1))."""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    out = np.zeros((z.size, nmax + 1), dtype=np.complex128)
    absz = np.abs(z)
    zero = absz == 0.0
    tiny = (absz < _TINY_Z) & ~zero
    up = absz > 2 * nmax
    mil = ~(up | zero | tiny)
    out[zero, 0] = 1.0

    if tiny.any():
        zt = z[tiny]
        z2 = zt * zt
        t = np.ones(zt.size, dtype=np.complex128)
        for m in range(nmax + 1):
            if m > 0:
                t = t * zt / (2 * m + 1)
            a = 2.0 * m + 3.0
            out[tiny, m] = t * (1.0 - z2 / (2.0 * a) + z2 * z2 / (8.0 * a * (a + 2.0)))

    if up.any():
        zu = z[up]
        s, c = np.sin(zu), np.cos(zu)
        seq = np.empty((zu.size, nmax + 1), dtype=np.complex128)
        seq[:, 0] = s / zu
        if nmax >= 1:
            seq[:, 1] = s / zu**2 - c / zu
        for m in range(1, nmax):
            seq[:, m + 1] = (2 * m + 1) / zu * seq[:, m] - seq[:, m - 1]
        out[up] = seq

    if mil.any():
        zm = z[mil]
        am = absz[mil]
        mstart = _miller_start(nmax, float(am.max()))
        seq = np.zeros((zm.size, nmax + 1), dtype=np.complex128)
        fp1 = np.zeros(zm.size, dtype=np.complex128)
        f = np.full(zm.size, 1e-30, dtype=np.complex128)
        for m in range(mstart, 0, -1):
            fm1 = (2 * m + 1) / zm * f - fp1
            fp1, f = f, fm1
            if m - 1 <= nmax:
                seq[:, m - 1] = f
            big = np.abs(f) > _BIG
            if big.any():
                f[big] /= _BIG
                fp1[big] /= _BIG
                seq[big, max(m - 1, 0):] /= _BIG
        s, c = np.sin(zm), np.cos(zm)
        j0 = s / zm
        scale = j0 / seq[:, 0]
        if nmax >= 1:
            j1 = s / zm**2 - c / zm
            use1 = (am >= _SMALL_Z) & (np.abs(j1) > np.abs(j0))
            scale = np.where(use1, j1 / np.where(use1, seq[:, 1], 1.0), scale)
        out[mil] = seq * scale[:, None]
    return out


def sph_yn_seq_numpy(nmax: int, z, jseq=None) -> np.ndarray:
    """Vectorized y_0..y_nmax; ``jseq`` may pass precomputed j_n values."""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    out = np.empty((z.size, nmax + 1), dtype=np.complex128)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out[:, 0] = -np.cos(z) / z
        near = np.abs(z.imag) < _WRONSKI_IM
        if near.any():
            zr = z[near]
            seq = np.empty((zr.size, nmax + 1), dtype=np.complex128)
            seq[:, 0] = out[near, 0]
            if nmax >= 1:
                seq[:, 1] = -np.cos(zr) / zr**2 - np.sin(zr) / zr
            for m in range(1, nmax):
                seq[:, m + 1] = (2 * m + 1) / zr * seq[:, m] - seq[:, m - 1]
            out[near] = seq
        far = ~near
        if far.any():
            zc = z[far]
            jc = sph_jn_seq_numpy(nmax, zc) if jseq is None else np.asarray(jseq)[far]
            seq = np.empty((zc.size, nmax + 1), dtype=np.complex128)
            seq[:, 0] = out[far, 0]
            w = 1.0 / zc**2
            for m in range(nmax):
                seq[:, m + 1] = (jc[:, m + 1] * seq[:, m] - w) / jc[:, m]
            out[far] = seq
    return out


def sph_jy_seq_numpy(nmax: int, z):
    """Both sequences at once, sharing the j_n pass."""
    jseq = sph_jn_seq_numpy(nmax, z)
    return jseq, sph_yn_seq_numpy(nmax, z, jseq)


def assoc_series_numpy(b: float, x: complex, max_terms: int = 2000):
    return _series_scalar(float(b), complex(x), int(max_terms))


# ---------------------------------------------------------------------------
# numba path
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    _jit = numba.njit(cache=True, fastmath=False, nogil=True)
    _jn_seq_scalar_nb = _jit(_jn_seq_scalar)
    _yn_seq_scalar_nb = _jit(_yn_seq_scalar)
    _series_scalar_nb = _jit(_series_scalar)

    @numba.njit(cache=True, nogil=True)
    def _jn_seq_many(nmax, z):
        out = np.zeros((z.size, nmax + 1), dtype=np.complex128)
        for i in range(z.size):
            _jn_seq_scalar_nb(nmax, z[i], out[i])
        return out

    @numba.njit(cache=True, nogil=True)
    def _yn_seq_many(nmax, z):
        out = np.empty((z.size, nmax + 1), dtype=np.complex128)
        jbuf = np.empty(nmax + 1, dtype=np.complex128)
        for i in range(z.size):
            if abs(z[i].imag) >= _WRONSKI_IM:
                _jn_seq_scalar_nb(nmax, z[i], jbuf)
            _yn_seq_scalar_nb(nmax, z[i], out[i], jbuf)
        return out

    @numba.njit(cache=True, nogil=True)
    def _jy_seq_many(nmax, z):
        jo = np.zeros((z.size, nmax + 1), dtype=np.complex128)
        yo = np.empty((z.size, nmax + 1), dtype=np.complex128)
        for i in range(z.size):
            _jn_seq_scalar_nb(nmax, z[i], jo[i])
            _yn_seq_scalar_nb(nmax, z[i], yo[i], jo[i])
        return jo, yo

    def sph_jn_seq_numba(nmax: int, z) -> np.ndarray:
        z = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
        return _jn_seq_many(int(nmax), z)

    def sph_yn_seq_numba(nmax: int, z) -> np.ndarray:
        z = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
        with np.errstate(divide="ignore", invalid="ignore"):
            return _yn_seq_many(int(nmax), z)

    def sph_jy_seq_numba(nmax: int, z):
        z = np.atleast_1d(np.asarray(z, dtype=np.complex128)).ravel()
        with np.errstate(divide="ignore", invalid="ignore"):
            return _jy_seq_many(int(nmax), z)

    def assoc_series_numba(b: float, x: complex, max_terms: int = 2000):
        return _series_scalar_nb(float(b), complex(x), int(max_terms))

else:  # pragma: no cover
    sph_jn_seq_numba = None
    sph_yn_seq_numba = None
    sph_jy_seq_numba = None
    assoc_series_numba = None


if USE_NUMBA:
    sph_jn_seq = sph_jn_seq_numba
    sph_yn_seq = sph_yn_seq_numba
    sph_jy_seq = sph_jy_seq_numba
    assoc_series = assoc_series_numba
else:
    sph_jn_seq = sph_jn_seq_numpy
    sph_yn_seq = sph_yn_seq_numpy
    sph_jy_seq = sph_jy_seq_numpy
    assoc_series = assoc_series_numpy
