"""Compiled vs numpy kernels on the hot paths.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from landscape import _backend
from landscape import classify as C
from landscape import moments as M
from landscape import transforms as T
from landscape.gbf import GenBoolFn


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases(rng):
    batch = rng.integers(0, 16, (256, 1 << 10))
    signs = rng.integers(-1, 2, (512, 1 << 12))
    one = GenBoolFn(16, 3, rng.integers(0, 8, 1 << 16))
    small = GenBoolFn(7, 3, rng.integers(0, 8, 1 << 7))
    space = np.array(np.unravel_index(np.arange(4 ** 4), (4,) * 4)).T[:, ::-1].copy()
    return {
        "fwht_rows 512 x 2^12": lambda: _backend.kernels.fwht_rows(signs.copy()),
        "gwht_batch 256 x n=10 k=4": lambda: T.gwht_batch(batch, 4),
        "gwht n=16 k=3": lambda: T.gwht(one),
        "second-derivative sums n=7 k=3": lambda: M.second_derivative_sums(small),
        "profile all (n=2, k=4)": lambda: C.profiles_batch(space.astype(np.int64), 4),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    have = _backend.available()
    print(f"backends: {have}")
    results = {}
    for name in have:
        with _backend.using(name):
            results[name] = {label: best_of(fn, args.repeat)
                             for label, fn in cases(np.random.default_rng(0)).items()}
    labels = list(next(iter(results.values())))
    print(f"{'kernel':34s}" + "".join(f"{b:>12s}" for b in have) + ("     speedup" if len(have) > 1 else ""))
    for label in labels:
        row = f"{label:34s}" + "".join(f"{results[b][label] * 1e3:10.2f}ms" for b in have)
        if "cython" in results and "python" in results:
            row += f"{results['python'][label] / results['cython'][label]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
