import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from besselint.errors import DomainError, OverflowRangeError
from besselint.special_fn import (
    log_gamma,
    mod_bessel_i,
    mod_bessel_k,
    riccati,
    sph_bessel_j,
    sph_bessel_y,
    sph_hankel,
    sph_jy,
)

mp.mp.dps = 30


def mp_j(n, z):
    z = mp.mpc(z)
    return complex(mp.sqrt(mp.pi / (2 * z)) * mp.besselj(n + 0.5, z))


def mp_y(n, z):
    z = mp.mpc(z)
    return complex(mp.sqrt(mp.pi / (2 * z)) * mp.bessely(n + 0.5, z))


def rel(a, b):
    return abs(a - b) / abs(b)


radii = st.floats(0.05, 100.0)
angles = st.floats(-0.35, 0.35)
orders = st.integers(0, 20)


def test_trivial_values():
    assert sph_bessel_j(0, 1.0) == pytest.approx(0.8414709848078965, rel=1e-15)
    assert abs(sph_bessel_j(0, math.pi)) < 1e-15
    assert abs(sph_bessel_y(0, math.pi / 2)) < 1e-15
    assert sph_bessel_y(0, 1.0) == pytest.approx(-0.5403023058681398, rel=1e-15)
    h = sph_hankel(0, 1.0)
    assert h.real == pytest.approx(0.8414709848, abs=1e-10)
    assert h.imag == pytest.approx(-0.5403023059, abs=1e-10)


def test_origin():
    assert sph_bessel_j(0, 0.0) == 1.0
    assert sph_bessel_j(3, 0.0) == 0.0
    with pytest.raises(DomainError):
        sph_bessel_y(0, 0.0)
    with pytest.raises(DomainError):
        sph_hankel(1, 0j)
    with pytest.raises(DomainError):
        riccati("chi", 1, 0.0)


def test_frozen_values():
    # mpmath at 30 digits
    assert rel(sph_bessel_j(2, 1.37), 0.10920180560847101) < 1e-13
    assert rel(sph_bessel_y(1, 2.96 + 1.479j), 0.3156373437342982 + 0.464260899603281j) < 1e-13


def test_y_wronskian_closure_complex():
    z = 2.96 + 1.479j
    j = sph_jy(2, z)
    jn, yn = j[0][0], j[1][0]
    # j_1 y_1' - j_1' y_1 = 1/z^2, with f_1' = f_0 - 2 f_1 / z
    jd = jn[0] - 2 * jn[1] / z
    yd = yn[0] - 2 * yn[1] / z
    assert rel(jn[1] * yd - jd * yn[1], 1 / z**2) < 1e-10


def test_hankel_composition_exact():
    z = 2.96 + 0.457j
    assert sph_hankel(1, z) == sph_bessel_j(1, z) + 1j * sph_bessel_y(1, z)


def test_hankel_modulus_large_x():
    for x in (1e3, 1e4):
        assert abs(sph_hankel(0, x)) == pytest.approx(1 / x, rel=1e-12)


@given(orders, radii, angles)
def test_j_against_mpmath(n, r, t):
    z = cmath.rect(r, t)
    ref = mp_j(n, z)
    if abs(ref) < 1e-280:
        return
    # near real zeros only accuracy against the envelope is meaningful
    envelope = math.exp(abs(z.imag)) / abs(z)
    assert abs(sph_bessel_j(n, z) - ref) <= 1e-12 * abs(ref) + 1e-15 * envelope


@given(orders, st.floats(1e-3, 100.0), angles)
def test_y_against_mpmath(n, r, t):
    z = cmath.rect(r, t)
    ref = mp_y(n, z)
    if not math.isfinite(abs(ref)) or abs(ref) > 1e300:
        return
    assert abs(sph_bessel_y(n, z) - ref) <= 1e-12 * abs(ref) + 1e-15


@given(st.integers(1, 15), radii, angles)
def test_recurrence_closure(n, r, t):
    z = cmath.rect(r, t)
    js, ys = sph_jy(n + 1, z)
    for seq in (js[0], ys[0]):
        lhs = seq[n - 1] + seq[n + 1]
        rhs = (2 * n + 1) * seq[n] / z
        scale = max(abs(seq[n - 1]), abs(seq[n + 1]), abs(rhs))
        assert abs(lhs - rhs) <= 1e-11 * scale


@given(st.integers(0, 10), st.floats(0.1, 50.0), st.floats(-0.3, 0.3))
def test_riccati_wronskian(n, r, t):
    z = cmath.rect(r, t)
    p = riccati("psi", n, z)
    c = riccati("chi", n, z)
    w = p.value * c.derivative - p.derivative * c.value
    # products grow like exp(2|Im z|); 1 is recovered by cancellation
    scale = max(1.0, abs(p.value * c.derivative) + abs(p.derivative * c.value))
    assert abs(w - 1) <= 1e-10 * scale


def test_riccati_wronskian_real_tight():
    p = riccati("psi", 3, 1.37)
    c = riccati("chi", 3, 1.37)
    assert abs(p.value * c.derivative - p.derivative * c.value - 1) < 1e-12


@given(st.sampled_from(["psi", "chi", "xi"]), st.integers(0, 12), radii, angles)
def test_riccati_value_is_z_times_base(fam, n, r, t):
    z = cmath.rect(r, t)
    tr = riccati(fam, n, z)
    assert abs(tr.value - z * tr.base) <= 1e-13 * abs(tr.value) + 1e-300


def test_riccati_order_zero():
    z = 0.7 + 0.2j
    p = riccati("psi", 0, z)
    c = riccati("χ", 0, z)
    assert p.value == pytest.approx(cmath.sin(z), rel=1e-15)
    assert p.derivative == pytest.approx(cmath.cos(z), rel=1e-15)
    assert c.value == pytest.approx(-cmath.cos(z), rel=1e-15)
    assert c.derivative == pytest.approx(cmath.sin(z), rel=1e-15)


@given(st.integers(1, 8), radii, angles)
def test_riccati_derivative_against_mpmath(n, r, t):
    z = cmath.rect(r, t)
    d = complex(mp.diff(lambda w: w * mp.sqrt(mp.pi / (2 * w)) * mp.besselj(n + 0.5, w), mp.mpc(z)))
    got = riccati("psi", n, z).derivative
    assert abs(got - d) <= 1e-11 * max(abs(d), abs(riccati("psi", n, z).value), 1e-300)


@given(st.integers(0, 8), radii, angles)
def test_conjugation_symmetry(n, r, t):
    z = cmath.rect(r, t)
    for f in (sph_bessel_j, sph_bessel_y):
        a = f(n, z.conjugate())
        b = f(n, z).conjugate()
        assert abs(a - b) <= 1e-14 * abs(b) + 1e-300


@given(st.integers(0, 6), st.floats(0.1, 30.0), angles)
def test_half_integer_consistency_via_I(n, r, t):
    # J_nu(z) = exp(-i nu pi/2) I_nu(i z) for -pi < arg z <= pi/2
    z = cmath.rect(r, t)
    nu = n + 0.5
    J = cmath.exp(-1j * nu * math.pi / 2) * mod_bessel_i(nu, 1j * z)
    via_i = cmath.sqrt(math.pi / (2 * z)) * J
    assert abs(via_i - sph_bessel_j(n, z)) <= 1e-12 * max(abs(via_i), 1e-300) + 1e-14 * abs(cmath.exp(abs(z.imag)))


def test_mod_bessel_values():
    x = 2.3
    assert mod_bessel_i(0.5, x) == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sinh(x), rel=1e-14)
    assert mod_bessel_i(0, 0) == 1.0
    arg = 1.37 * 2.96 / (2 * 3.58)
    assert rel(mod_bessel_i(2.5, arg), 0.013137794839550205) < 1e-13
    assert mod_bessel_k(0.5, x) == pytest.approx(math.sqrt(math.pi / (2 * x)) * math.exp(-x), rel=1e-14)
    assert rel(mod_bessel_k(0, 1.0), 0.42102443824070834) < 1e-14


def test_mod_bessel_scaled_and_overflow():
    z = 800.0
    with pytest.raises(OverflowRangeError):
        mod_bessel_i(1.5, z)
    s = mod_bessel_i(1.5, z, scaled=True)
    assert s == pytest.approx(1 / math.sqrt(2 * math.pi * z) * (1 - (4 * 1.5**2 - 1) / (8 * z)), rel=1e-5)
    assert mod_bessel_k(2, 3.0, scaled=True) == pytest.approx(math.exp(3.0) * mod_bessel_k(2, 3.0), rel=1e-14)
    with pytest.raises(DomainError):
        mod_bessel_k(1, -2.0)
    with pytest.raises(DomainError):
        mod_bessel_k(0, 0.0)


def test_log_gamma():
    assert log_gamma(1) == 0.0
    assert log_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-15)
    assert log_gamma(21) == pytest.approx(math.log(math.factorial(20)), rel=1e-13)
    with pytest.raises(DomainError):
        log_gamma(0.0)


def test_arrays_match_scalars():
    z = np.array([0.3, 1.37 + 0.2j, 7.0 - 1.5j])
    js, ys = sph_jy(4, z)
    for i, zi in enumerate(z):
        for n in range(5):
            assert js[i, n] == pytest.approx(sph_bessel_j(n, zi), rel=1e-15)
            assert ys[i, n] == pytest.approx(sph_bessel_y(n, zi), rel=1e-15)
