import math

import numpy as np
import pytest

from besselint import oracle
from besselint.conformance import KILL_PUBLISHED, _parse_published, kill_quadrature, printed_digits, sig_digit_match
from besselint.errors import DomainError, NonConvergenceError, UnboundedGrowthError
from besselint.oracle import QuadratureConfig, quad_finite, quad_killed


def test_elementary_integrals():
    assert quad_finite(np.sin, 0.0, math.pi).regular == pytest.approx(2.0, rel=1e-14)
    assert quad_finite(lambda x: x * x, 0.0, 1.0).regular == pytest.approx(1 / 3, rel=1e-14)
    # scalar callables are accepted too
    assert quad_finite(lambda x: math.exp(x), 0.0, 1.0).regular == pytest.approx(math.e - 1, rel=1e-14)


def test_gaussian_cosine():
    # int_0^inf cos(wx) e^{-eta x^2} dx = sqrt(pi/eta)/2 e^{-w^2/(4 eta)}
    w, eta = 3.0, 0.7
    got = quad_killed(lambda x: np.cos(w * x), eta, frequency=w).regular
    assert got == pytest.approx(0.5 * math.sqrt(math.pi / eta) * math.exp(-w * w / (4 * eta)), rel=1e-11)


def test_growing_integrand():
    # int_0^inf e^{gx} e^{-eta x^2} dx with g = 1, eta = 0.5
    g, eta = 1.0, 0.5
    exact = 0.5 * math.sqrt(math.pi / eta) * math.exp(g * g / (4 * eta)) * (1 + math.erf(g / (2 * math.sqrt(eta))))
    assert quad_killed(lambda x: np.exp(g * x), eta, growth=g).regular == pytest.approx(exact, rel=1e-11)


def test_truncation_is_sound():
    f = lambda x: np.cos(2 * x)
    ref = quad_killed(f, 100.0, frequency=2.0).regular
    fin = quad_finite(lambda x: np.cos(2 * x) * np.exp(-100 * x * x), 0.0, 2.0).regular
    assert ref == pytest.approx(fin, rel=1e-13)
    tight = QuadratureConfig(kill_threshold=1e-30)
    assert quad_killed(f, 0.05, frequency=2.0).regular == pytest.approx(
        quad_killed(f, 0.05, cfg=tight, frequency=2.0).regular, rel=1e-11
    )


def test_oscillation_panels_are_sound():
    # many oscillations per unit length
    w, eta = 40.0, 0.01
    got = quad_killed(lambda x: np.cos(w * x), eta, frequency=w).regular
    assert abs(got - 0.5 * math.sqrt(math.pi / eta) * math.exp(-w * w / (4 * eta))) < 1e-10


def test_refusals():
    with pytest.raises(UnboundedGrowthError):
        quad_killed(lambda x: np.exp(3 * x), 1e-3, growth=3.0)
    with pytest.raises(NonConvergenceError):
        quad_finite(lambda x: np.sin(1 / (x + 1e-6)), 0.0, 1.0, QuadratureConfig(max_intervals=3))
    with pytest.raises(DomainError):
        quad_finite(np.sin, 1.0, 1.0)
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0)


@pytest.mark.parametrize("eta", sorted(KILL_PUBLISHED))
def test_kill_demo_values(eta):
    text = KILL_PUBLISHED[eta]
    assert sig_digit_match(kill_quadrature(eta).regular, _parse_published(text), printed_digits(text))


def test_kill_demo_refuses_smallest_width():
    with pytest.raises(UnboundedGrowthError):
        kill_quadrature(0.001)


def test_kill_demo_monotone_refinement():
    from besselint.conformance import kill_limit

    lim = kill_limit()
    d = [abs(kill_quadrature(eta).regular - lim) for eta in (0.02, 0.01, 0.005)]
    assert d[0] > d[1] > d[2]


def test_oracle_gaussian_kinds():
    # JJ with equal arguments has the modified-Bessel closed form
    from scipy.special import ive

    K, eta, b = 1.1, 0.8, 1.5
    expect = ive(b, K * K / (2 * eta)) / (2 * eta)
    assert oracle.oracle_gaussian("JJ", b, K, K, eta).regular == pytest.approx(expect, rel=1e-10)
    with pytest.raises((DomainError, ValueError)):
        oracle.oracle_gaussian("XX", 1, 1.0, 1.0, 1.0)
