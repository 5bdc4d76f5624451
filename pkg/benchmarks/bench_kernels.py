"""Compare the numba and numpy kernels on oracle-sized workloads.

Usage::

    python benchmarks/bench_kernels.py [--sizes 1000 10000] [--nmax 6] [--repeat 5]

Both backends are importable by name regardless of BESSELINT_NUMBA, so one
process times them side by side.  The numba timings exclude compilation
(one warm-up call is made first).
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from besselint import _kernels as kern


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _arguments(size, rng):
    # the mix seen by the oracle: real nodes times complex wavenumbers
    x = rng.uniform(1e-3, 60.0, size)
    k = 2.96 + 0.457j
    return k * x


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[1_000, 10_000, 100_000])
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    if not kern.HAVE_NUMBA:
        print("numba is not installed; only the numpy path is available")
        return 1
    rng = np.random.default_rng(0)
    kern.sph_jy_seq_numba(args.nmax, _arguments(8, rng))  # compile
    kern.assoc_series_numba(0.3, -5.0 + 0.1j, 100)

    print(f"{'workload':<28s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'speedup':>9s} {'max |diff|':>12s}")
    for size in args.sizes:
        z = _arguments(size, rng)
        t_np = _best(lambda: kern.sph_jy_seq_numpy(args.nmax, z), args.repeat)
        t_nb = _best(lambda: kern.sph_jy_seq_numba(args.nmax, z), args.repeat)
        jn, yn = kern.sph_jy_seq_numpy(args.nmax, z)
        jb, yb = kern.sph_jy_seq_numba(args.nmax, z)
        scale = np.maximum(np.abs(jn), np.abs(yn)).max()
        diff = max(np.abs(jn - jb).max(), np.abs(yn - yb).max()) / scale
        print(f"{'sph_jy_seq n<=%d x %d' % (args.nmax, size):<28s} "
              f"{1e3 * t_np:12.3f} {1e3 * t_nb:12.3f} {t_np / t_nb:9.1f} {diff:12.2e}")

    bs = rng.uniform(0.1, 5.0, 200)
    xs = -rng.uniform(0.1, 8.0, 200) + 0.3j
    t_np = _best(lambda: [kern.assoc_series_numpy(b, x, 4000) for b, x in zip(bs, xs)], args.repeat)
    t_nb = _best(lambda: [kern.assoc_series_numba(b, x, 4000) for b, x in zip(bs, xs)], args.repeat)
    diff = max(
        abs(kern.assoc_series_numpy(b, x, 4000)[0] - kern.assoc_series_numba(b, x, 4000)[0])
        / abs(kern.assoc_series_numpy(b, x, 4000)[0])
        for b, x in zip(bs, xs)
    )
    print(f"{'assoc_series x 200':<28s} {1e3 * t_np:12.3f} {1e3 * t_nb:12.3f} {t_np / t_nb:9.1f} {diff:12.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
