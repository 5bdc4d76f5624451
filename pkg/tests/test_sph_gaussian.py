import math

import pytest

from besselint import sph_gaussian as sph
from besselint.conformance import TABLE1, TABLE1_ETA, TABLE1_K, TABLE1_k, _parse_published, printed_digits, sig_digit_match
from besselint.errors import DegenerateError, DivergenceError, DomainError
from besselint.oracle import oracle_gaussian

FUNCS = {"jj": sph.int_jj, "jy": sph.int_jy, "yy": sph.int_yy}


@pytest.mark.parametrize("kind,n,row,text", [r for r in TABLE1 if r[0] != "jy" or r[2] == 0])
def test_published_values(kind, n, row, text):
    got = FUNCS[kind](n, TABLE1_K[row], TABLE1_k[row], TABLE1_ETA)
    assert sig_digit_match(got, _parse_published(text), printed_digits(text))


@pytest.mark.parametrize("kind", ["jj", "jy"])
@pytest.mark.parametrize("n", [0, 1, 3])
def test_spherical_against_oracle(kind, n):
    K, k = 1.37 + 0.457j, 2.96 + 1.749j
    q = oracle_gaussian(kind, n, K, k, TABLE1_ETA).regular
    assert FUNCS[kind](n, K, k, TABLE1_ETA) == pytest.approx(q, rel=1e-9)


def test_jym_signs():
    for n in range(4):
        assert sph.int_jym(n, 1.37, 2.96, 1.1) == (-1) ** n * sph.int_jj(n, 1.37, 2.96, 1.1)
        q = oracle_gaussian("jym", n, 1.37, 2.96, 1.1).regular
        assert sph.int_jym(n, 1.37, 2.96, 1.1) == pytest.approx(q, rel=1e-9, abs=1e-13)


def test_yy_higher_order_diverges():
    with pytest.raises(DivergenceError):
        sph.int_yy(1, 1.0, 2.0, 0.5)


def test_limit_eta0_values():
    lim = sph.limit_eta0("jj", 2, 1.0, 2.0)
    assert lim.regular == 0 and lim.delta_coeff == pytest.approx(math.pi / 4)
    assert sph.limit_eta0("jy", 0, 1, 2).regular == pytest.approx(1 / 6, rel=1e-15)
    assert sph.limit_eta0("jy", 0, 1, 2).delta_coeff == 0
    assert sph.limit_eta0("yy0", 0, 1, 2).delta_coeff == pytest.approx(math.pi / 4)
    with pytest.raises(DivergenceError):
        sph.limit_eta0("yy0", 1, 1, 2)
    with pytest.raises(DomainError):
        sph.limit_eta0("hh", 0, 1, 2)
    with pytest.raises(DegenerateError) as info:
        sph.limit_eta0("jj", 1, 1.5, 1.5)
    assert info.value.delta_coeff == pytest.approx(math.pi / (2 * 1.5**2))


@pytest.mark.parametrize("n", [0, 1, 2])
def test_jy_approaches_limit(n):
    K, k = 1.37, 2.96
    lim = sph.limit_eta0("jy", n, K, k).regular
    assert sph.int_jy(n, K, k, 1e-3) == pytest.approx(lim, rel=1e-2)


def test_jj_regular_part_vanishes():
    assert abs(sph.int_jj(1, 1.0, 2.0, 1e-3)) < 1e-12


def test_delta_growth_at_equal_arguments():
    # I_jj(K = k) ~ pi/(2k^2) / sqrt(4 pi eta) as eta -> 0
    k = 1.3
    for eta in (1e-3, 1e-4):
        ratio = sph.int_jj(1, k, k, eta) / (math.pi / (2 * k * k) / math.sqrt(4 * math.pi * eta))
        assert ratio.real == pytest.approx(1.0, rel=0.05)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_equal_argument_jy_limit(n):
    k = 1.0
    assert sph.int_jy(n, k, k, 1e-6).real == pytest.approx(-(2 * n + 1) / (4 * k**3), rel=1e-2)
