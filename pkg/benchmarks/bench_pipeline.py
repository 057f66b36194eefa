"""Wall-clock timings for the heavier operations.

    python benchmarks/bench_pipeline.py [--seed N] [--runs N]
"""

import argparse
import random
import time

from elimcycle.errors import ElimError
from elimcycle.groebner import groebner, local_contains
from elimcycle.eliminate import run_pipeline
from elimcycle.ring import X, Y, Z
from elimcycle.sampling import random_poly, random_setup_polys, random_unit
from elimcycle.scenario import Scenario


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--runs", type=int, default=20)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    times = []
    for _ in range(args.runs):
        gens = random_setup_polys(rng)[:2]
        p = random_unit(rng) * gens[0] + random_poly(rng, 3, 3) * gens[1]
        _, t = timed(local_contains, p, groebner(gens))
        times.append(t)
    print(f"local_contains (nonlinear primes): median {sorted(times)[len(times) // 2] * 1e3:.1f} ms, "
          f"max {max(times) * 1e3:.1f} ms")

    for label, nonlinear in (("pipeline on (x, y, z)", False), ("pipeline on random setups", True)):
        times = []
        for _ in range(args.runs):
            f, g, h = random_setup_polys(rng) if nonlinear else (X, Y, Z)
            b1 = random_unit(rng, 2, 2) * h + random_poly(rng, 2, 2) * f
            sc = Scenario(f, g, h, random_poly(rng, 3, 3), b1, random_poly(rng, 3, 3))
            try:
                _, t = timed(run_pipeline, sc)
            except ElimError:
                continue
            times.append(t)
        times.sort()
        print(f"{label}: {len(times)} runs, median {times[len(times) // 2] * 1e3:.1f} ms, "
              f"max {times[-1] * 1e3:.1f} ms")


if __name__ == "__main__":
    main()
