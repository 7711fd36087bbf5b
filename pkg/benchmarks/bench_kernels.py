"""Benchmark the numba kernels against their NumPy/Python fallbacks.

Usage: python benchmarks/bench_kernels.py [--quick]

Runs each hot kernel on a representative workload through both
implementations (the selected path plus the fallback) and prints the
speedup.  Results are identical across paths; only time differs.
"""

import argparse
import time

import numpy as np

from dnacf import _kernels, search


def timeit(fn, *args, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, workload, args, check=np.array_equal):
    impls = _kernels.IMPLEMENTATIONS[name]
    if "numba" in impls:
        # warm the JIT outside the timed region
        impls["numba"](*args)
    rows = {}
    outputs = {}
    for impl_name, fn in impls.items():
        dt, out = timeit(fn, *args)
        rows[impl_name] = dt
        outputs[impl_name] = out
    if len(outputs) == 2:
        a, b = outputs["numba"], outputs["numpy"]
        if isinstance(a, tuple):
            same = all(check(x, y) for x, y in zip(a, b))
        else:
            same = check(a, b)
        assert same, f"{name}: implementations disagree"
    base = rows.get("numpy")
    line = f"{name:24s} [{workload}]"
    for impl_name in sorted(rows):
        line += f"  {impl_name}: {rows[impl_name]*1e3:9.2f} ms"
    if "numba" in rows and base:
        line += f"  speedup: {base / rows['numba']:6.1f}x"
    print(line)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    opts = ap.parse_args()

    print(f"numba enabled: {_kernels.NUMBA_ENABLED} "
          "(set DNACF_NO_NUMBA=1 to run the package on the fallback path)")

    n, ell, g = (7, 3, 3) if opts.quick else (8, 4, 4)
    bench("enumerate_seed_values", f"n={n} ell={ell} g={g}", (n, ell, g))

    rng = np.random.default_rng(1)
    m, width = (120, 21) if opts.quick else (600, 21)
    mat = rng.integers(0, 4, size=(m, width), dtype=np.uint8)
    bench("min_pairwise_u8", f"{m}x{width}", (mat,), check=lambda a, b: int(a) == int(b))
    rev = np.ascontiguousarray(mat[:, ::-1])
    bench("min_cross_u8", f"{m}x{width}", (mat, rev), check=lambda a, b: int(a) == int(b))

    spec = search.SeedSetSpec(6, 3, 3)
    vals = _kernels.enumerate_seed_values(spec.n, spec.ell, spec.g)
    orb_of, orb_ptr, orb_members = search._orbit_partition(vals, spec.n)
    trials = 2_000 if opts.quick else 20_000
    bench(
        "run_trials",
        f"|S|={vals.size} trials={trials}",
        (vals, orb_of, orb_ptr, orb_members, spec.n, trials, 1, _kernels.LAW_MIXED),
    )


if __name__ == "__main__":
    main()
