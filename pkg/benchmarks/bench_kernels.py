"""Timing comparison of the numba and numpy kernel backends.

The package keeps two implementations of each hot loop: an ``@njit``
version and a vectorized numpy fallback (selected at import time, see
``inferspace._kernels``).  This script times both on workloads shaped like
real use and prints a small table with the speedup.

Workloads:
  * ``bilinear_many``: interpolating a 2D table at many scattered points,
    which is what evaluating or pushing forward a 2D density does.
  * ``accumulate_campaign``: folding thousands of narrow separable
    lognormal joints into one accumulator grid, the inner loop of
    empirical theory building.

The numba column requires numba to be importable; compilation happens in
an untimed warmup call.  Run with INFERSPACE_NO_NUMBA unset so both
backends are available:

    python3 benchmarks/bench_kernels.py [--points N] [--experiments N]
        [--grid N] [--repeats N]
"""

import argparse
import math
import time

import numpy as np

from inferspace._kernels import (
    HAS_NUMBA,
    _accumulate_campaign_numpy,
    _bilinear_many_numpy,
    backend,
)

if HAS_NUMBA:
    from inferspace._kernels import (
        _accumulate_campaign_numba,
        _bilinear_many_numba,
    )


def trapezoid_weights(u: np.ndarray) -> np.ndarray:
    w = np.empty_like(u)
    w[1:-1] = 0.5 * (u[2:] - u[:-2])
    w[0] = 0.5 * (u[1] - u[0])
    w[-1] = 0.5 * (u[-1] - u[-2])
    return w


def best_of(fn, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bilinear_workload(grid: int, points: int, seed: int):
    rng = np.random.default_rng(seed)
    ux = np.linspace(math.log(0.1), math.log(100.0), grid)
    uy = np.linspace(math.log(0.05), math.log(5.0), grid)
    values = rng.random((grid, grid))
    px = rng.uniform(ux[0], ux[-1], points)
    py = rng.uniform(uy[0], uy[-1], points)
    return ux, uy, values, px, py


def campaign_workload(grid: int, experiments: int, seed: int):
    rng = np.random.default_rng(seed)
    ux = np.linspace(math.log(0.5), math.log(20.0), grid)
    uy = np.linspace(math.log(0.25), math.log(2.5), grid)
    wx = trapezoid_weights(ux)
    wy = trapezoid_weights(uy)
    cx = rng.uniform(ux[0], ux[-1], experiments)
    cy = rng.uniform(uy[0], uy[-1], experiments)
    return ux, wx, uy, wy, cx, cy, 0.05, 0.05, 9.0


def run(args: argparse.Namespace) -> None:
    rows = []

    bi = bilinear_workload(args.grid, args.points, seed=11)
    t_np = best_of(lambda: _bilinear_many_numpy(*bi), args.repeats)
    t_nb = None
    if HAS_NUMBA:
        _bilinear_many_numba(*bi)  # warmup: JIT compile, untimed
        t_nb = best_of(lambda: _bilinear_many_numba(*bi), args.repeats)
    rows.append(("bilinear_many", f"{args.points} points", t_np, t_nb))

    ca = campaign_workload(args.grid, args.experiments, seed=12)
    acc = np.zeros((args.grid, args.grid))

    def run_np():
        acc.fill(0.0)
        _accumulate_campaign_numpy(acc, *ca)

    t_np = best_of(run_np, args.repeats)
    t_nb = None
    if HAS_NUMBA:

        def run_nb():
            acc.fill(0.0)
            _accumulate_campaign_numba(acc, *ca)

        run_nb()  # warmup
        t_nb = best_of(run_nb, args.repeats)
    rows.append(
        ("accumulate_campaign", f"{args.experiments} experiments", t_np, t_nb)
    )

    print(f"active backend: {backend()}  (grid {args.grid}x{args.grid}, "
          f"best of {args.repeats})")
    header = f"{'kernel':<22}{'workload':<22}{'numpy':>12}{'numba':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, load, t_np, t_nb in rows:
        numba_col = f"{t_nb * 1e3:9.1f} ms" if t_nb is not None else f"{'n/a':>12}"
        speedup = f"{t_np / t_nb:9.1f}x" if t_nb else f"{'-':>10}"
        print(f"{name:<22}{load:<22}{t_np * 1e3:9.1f} ms{numba_col}{speedup}")
    if not HAS_NUMBA:
        print("numba unavailable or disabled; only the numpy fallback was timed")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=400_000,
                        help="interpolation points for bilinear_many")
    parser.add_argument("--experiments", type=int, default=20_000,
                        help="experiments for accumulate_campaign")
    parser.add_argument("--grid", type=int, default=601,
                        help="nodes per grid side")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats; the best is reported")
    run(parser.parse_args())


if __name__ == "__main__":
    main()
