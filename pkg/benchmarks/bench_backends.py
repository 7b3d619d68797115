"""Compare the compiled and numpy kernel backends.

Times the raw kernels (Si on an array, the Si-weighted sum behind SE1/DE1,
the sinc sum behind SE2/DE2, the corrected-basis sum behind SE3/DE3) and then
full formula runs at the benchmark sizes, reporting the speedup of the
compiled backend. Usage:

    python benchmarks/bench_backends.py [--repeats 7] [--quick]
"""
import argparse
import statistics
import time

import numpy as np

from sincindef import builtin_problem, kernels
from sincindef.bench import measure


def best_time(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def kernel_cases(size, m):
    rng = np.random.default_rng(0)
    x = rng.uniform(-80, 80, size)
    u = rng.uniform(-m / 2, m / 2, size)
    w = rng.normal(size=m)
    left = np.linspace(1.0, 0.0, m + 2)[1:-1]
    right = 1.0 - left
    xl = rng.uniform(0, 1, size)
    xr = 1.0 - xl
    jmin = -(m // 2)
    return {
        f"si({size})": lambda k: k.si(x),
        f"si_dot({size}x{m})": lambda k: k.si_dot(u, w, jmin),
        f"sinc_dot({size}x{m})": lambda k: k.sinc_dot(u, w, jmin),
        f"omega_dot({size}x{m})": lambda k: k.omega_dot(u, w, left, right, xl, xr, jmin, True),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=7)
    ap.add_argument("--quick", action="store_true", help="smaller sizes, for smoke runs")
    args = ap.parse_args(argv)

    names = kernels.available_backends()
    if "cython" not in names:
        print("compiled backend not built; only numpy is available")
    size, m = (200, 41) if args.quick else (1000, 161)

    print(f"{'case':<28}" + "".join(f"{n:>14}" for n in names) + (f"{'speedup':>10}" if len(names) > 1 else ""))
    for label, fn in kernel_cases(size, m).items():
        t = {n: best_time(lambda: fn(kernels.get_backend(n)), args.repeats) for n in names}
        row = f"{label:<28}" + "".join(f"{t[n] * 1e3:>11.3f} ms" for n in names)
        if len(names) > 1:
            row += f"{t['numpy'] / t['cython']:>9.1f}x"
        print(row)

    print()
    ns = (10, 40) if args.quick else (20, 60, 120)
    for formula in ("SE1", "DE1", "DE2", "DE3"):
        for n in ns:
            t = {}
            for name in names:
                prev = kernels.set_backend(name)
                try:
                    t[name] = measure(formula, builtin_problem(1), n, repeats=args.repeats).elapsed_seconds
                finally:
                    kernels.set_backend(prev)
            row = f"{formula + ' n=' + str(n):<28}" + "".join(f"{t[x] * 1e3:>11.3f} ms" for x in names)
            if len(names) > 1:
                row += f"{t['numpy'] / t['cython']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
