"""Time the compiled and numpy census kernels on the same slices.

    python benchmarks/bench_kernel.py --max 12 --repeat 3
"""

import argparse
import time

from f2conics import kernel
from f2conics.census import census


def bench(M, backend, repeat):
    best = float("inf")
    row = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        row = census(M, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return row, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min", type=int, default=6)
    ap.add_argument("--max", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = kernel.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'M':>3} {'pairs':>12} " + " ".join(f"{b + ' s':>12}" for b in backends)
          + f" {'speedup':>8} {'ns/pair':>8}")
    for M in range(args.min, args.max + 1):
        results = {b: bench(M, b, args.repeat) for b in backends}
        rows = {r.soluble for r, _ in results.values()}
        if len(rows) != 1:
            raise SystemExit(f"backends disagree at M={M}: {results}")
        pairs = next(iter(results.values()))[0].visited
        times = [results[b][1] for b in backends]
        speedup = times[-1] / times[0] if len(times) > 1 else 1.0
        print(f"{M:>3} {pairs:>12} " + " ".join(f"{t:>12.4f}" for t in times)
              + f" {speedup:>8.1f} {1e9 * times[0] / pairs:>8.2f}")


if __name__ == "__main__":
    main()
