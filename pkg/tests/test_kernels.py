import os
import subprocess
import sys

import numpy as np
import pytest

from besselint import _kernels as kern

needs_numba = pytest.mark.skipif(not kern.HAVE_NUMBA, reason="numba not installed")


def _args(seed=0, size=500):
    rng = np.random.default_rng(seed)
    r = np.exp(rng.uniform(np.log(1e-4), np.log(120.0), size))
    t = rng.uniform(-0.4, 0.4, size)
    return r * np.exp(1j * t)


@needs_numba
@pytest.mark.parametrize("nmax", [0, 1, 3, 8, 20])
def test_backends_agree(nmax):
    z = _args(nmax)
    jn, yn = kern.sph_jy_seq_numpy(nmax, z)
    jb, yb = kern.sph_jy_seq_numba(nmax, z)
    assert np.allclose(jn, jb, rtol=1e-13, atol=0)
    finite = np.isfinite(yn)
    assert np.allclose(yn[finite], yb[finite], rtol=1e-13, atol=0)


@needs_numba
def test_series_backends_agree():
    rng = np.random.default_rng(3)
    for _ in range(50):
        b = rng.uniform(0.05, 5)
        x = complex(-rng.uniform(0, 8), rng.uniform(-1, 1))
        a = kern.assoc_series_numpy(b, x, 4000)
        c = kern.assoc_series_numba(b, x, 4000)
        assert a[0] == pytest.approx(c[0], rel=1e-14)
        assert a[2] == c[2]


@pytest.mark.parametrize("z", [1e-300, 1e-200, 1e-20, 1e-300 + 1e-300j, 9.99e-4, 1.01e-3])
def test_tiny_arguments(z):
    js = kern.sph_jn_seq(4, np.array([z]))[0]
    t = 1.0 + 0j
    for n in range(5):
        if n:
            t *= z / (2 * n + 1)
        assert js[n] == pytest.approx(t * (1 - z * z / (2 * (2 * n + 3))), rel=1e-14, abs=0)


def test_zero_argument():
    js = kern.sph_jn_seq(3, np.array([0j]))[0]
    assert list(js) == [1, 0, 0, 0]


def test_env_flag_selects_numpy():
    code = "from besselint import backend; print(backend())"
    env = dict(os.environ, BESSELINT_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


@needs_numba
def test_default_backend_is_numba():
    code = "from besselint import backend; print(backend())"
    env = {k: v for k, v in os.environ.items() if k != "BESSELINT_NUMBA"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numba"


def test_numpy_backend_end_to_end():
    # a Table-1 value through the pure-numpy path
    code = (
        "from besselint import sph_gaussian as s, oracle as o;"
        "print(repr(s.int_jy(1, 1.37, 2.96, 3.58)), repr(o.oracle_gaussian('jy', 1, 1.37, 2.96, 3.58).regular))"
    )
    env = dict(os.environ, BESSELINT_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    a, q = (complex(v) for v in out.stdout.split())
    assert a.real == pytest.approx(-0.00851273, abs=5e-9)
    assert abs(a - q) < 1e-12
