import math

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from besselint import assoc_bessel as ab
from besselint import cyl_gaussian as cyl
from besselint._kernels import assoc_series
from besselint.errors import AccuracyLossError, DomainError, OrderError
from besselint.special_fn import mod_bessel_i, mod_bessel_k

mp.mp.dps = 30


def mp_h(b, a):
    b = mp.mpf(b)
    a = mp.mpc(a)
    return complex(-mp.exp(1 / (2 * a)) / b**2 * mp.hyp2f2(0.5, 1, 1 - b, 1 + b, -1 / a))


def test_frozen_series_value():
    # b = 3/2, a = 0.05: the angular-integral regime
    assert ab.h_minus1(1.5, 0.05) == pytest.approx(-2107.286714887483, rel=1e-10)


@given(st.floats(0.05, 6.0), st.floats(0.02, 5.0), st.floats(-0.5, 0.5))
def test_h_against_mpmath(b, ar, ai):
    if abs(b - round(b)) < 1e-3:
        b += 0.01
    a = complex(ar, ai * ar)
    ref = mp_h(b, a)
    got = ab.h_minus1(b, a)
    assert abs(got - ref) <= 1e-10 * abs(ref)


def test_symmetry_in_b():
    # series at -b against the angular form at +b (different algorithms)
    for b in (0.5, 1.3, 2.5, 3.7):
        for x in (-0.5, -3.0, -7.9, -6 + 1j):
            series = assoc_series(-b, x, 4000)[0]
            angular = b * math.sqrt(math.pi) / math.sin(math.pi * b) * ab._angular(b, x)
            assert series == pytest.approx(angular, rel=1e-11)
    assert ab.h_minus1(0.5, 1.0) == ab.h_minus1(-0.5, 1.0)


def test_errors():
    with pytest.raises(OrderError):
        ab.h_minus1(2.0, 0.5)
    with pytest.raises(DomainError):
        ab.h_minus1(0.5, -1.0)
    with pytest.raises(DomainError):
        ab.h_minus1(0.5, 0.0)


def test_cancellation_monitor(monkeypatch):
    # force the direct series well beyond its safe range
    monkeypatch.setattr(ab, "SERIES_LIMIT", 80.0)
    with pytest.raises(AccuracyLossError):
        ab.h_minus1_scaled(0.5, 1 / 60.0)


def test_H_int_terminating():
    a = 0.37
    assert ab.H_minus1_int(1, a) == pytest.approx(-2 * a * math.exp(1 / (2 * a)), rel=1e-15)
    series = 1 + 2 * a / 3 + 4 * a**2 * 4 / 15 + 8 * a**3 * 36 / 105 + 16 * a**4 * 576 / 945
    assert ab.H_minus1_int(0, a) == pytest.approx(-2 * a * math.exp(1 / (2 * a)) * series, rel=1e-14)
    # for n >= 1 the series stops after n terms regardless of max_terms
    for n in range(1, 7):
        assert ab.H_minus1_int_scaled(n, a, max_terms=50) == ab.H_minus1_int_scaled(n, a)


def test_H_int_reproduces_oracle_via_integer_route():
    from besselint.oracle import oracle_gaussian

    a = 0.1
    q = oracle_gaussian("JY", 2, 1.0, 1.0, a).regular
    assert cyl.int_JY(2, 1.0, 1.0, a) == pytest.approx(q, abs=1e-8)
    assert cyl.jy_integer_special_case(2, a) == pytest.approx(q, abs=1e-8)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_h_H_consistency_near_integer(n):
    a = 1.0 / (1.37 * 2.96)
    b = n + 1e-6
    s, c = cyl._trig(b)
    lhs = b * ab.h_minus1(b, a) + math.pi * c / s * mod_bessel_i(b, 1 / (2 * a))
    rhs = n * ab.H_minus1_int(n, a) - (-1) ** n * mod_bessel_k(n, 1 / (2 * a))
    assert abs(lhs - rhs) <= 1e-5 * abs(rhs)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0])
def test_h_H_consistency_order_zero(a):
    b = 1e-6
    s, c = cyl._trig(b)
    lhs = b * ab.h_minus1(b, a) + math.pi * c / s * mod_bessel_i(b, 1 / (2 * a))
    rhs = -mod_bessel_k(0, 1 / (2 * a))
    assert abs(lhs - rhs) <= 1e-5 * abs(rhs)


def _series(parity, x, alpha, terms=200):
    start = 0 if parity == "even" else 1
    return float(mp.fsum(mp.mpf(x) ** l / mp.factorial(l) / mp.sqrt(l + alpha) for l in range(start, terms, 2)))


def test_accel_sum_trivial():
    assert ab.accel_sum("even", 0.0, 1.5) == pytest.approx(1 / math.sqrt(1.5), rel=1e-13)
    assert ab.accel_sum("odd", 0.0, 1.5) == 0.0
    assert ab.accel_sum("even", -3.0, 1.5) == pytest.approx(5.08857455041042, rel=1e-12)


@pytest.mark.parametrize("alpha", [0.75, 1.5, 4.75])
@pytest.mark.parametrize("x", [-10.0, -4.0, -0.3, 0.8, 5.0, 10.0])
def test_accel_sum_against_series(alpha, x):
    for parity in ("even", "odd"):
        assert ab.accel_sum(parity, x, alpha) == pytest.approx(_series(parity, x, alpha), rel=1e-11)
    # the pair sum cancels for x < 0, so compare on the scale of the terms
    ref = _series("even", x, alpha) + _series("odd", x, alpha)
    scale = abs(_series("even", x, alpha))
    assert abs(ab.accel_pair_sum(x, alpha) - ref) <= 1e-11 * scale


def test_accel_errors():
    with pytest.raises(DomainError):
        ab.accel_sum("even", 1.0, 0.0)
    with pytest.raises(DomainError):
        ab.accel_sum("both", 1.0, 1.0)


def test_alpha_opt():
    assert ab.alpha_opt(0) == 0.25
    assert ab.alpha_opt(0.5) == 0.75
    assert ab.alpha_opt(1.5) == 4.75


def test_diff_estimate():
    alpha = 1.5
    assert ab.diff_estimate(math.e * alpha, alpha) == pytest.approx(2 * math.exp(-3) / math.sqrt(3), rel=1e-14)
    exact = abs(ab.accel_sum("even", -20, alpha) + ab.accel_sum("odd", -20, alpha))
    assert ab.diff_estimate(20, alpha) == pytest.approx(exact, rel=0.15)
    vals = [ab.diff_estimate(x, alpha) for x in (5, 10, 50, 200, 1000)]
    assert all(u > v for u, v in zip(vals, vals[1:]))
    with pytest.raises(DomainError):
        ab.diff_estimate(1.0, alpha)


def test_ratio_tends_to_one():
    r = [ab.accel_sum("odd", x, 1.5) / ab.accel_sum("even", x, 1.5) for x in (1, 5, 20, 60)]
    assert all(abs(1 - v) > abs(1 - w) for v, w in zip(r, r[1:]))
    assert r[-1] == pytest.approx(1.0, abs=1e-12)
