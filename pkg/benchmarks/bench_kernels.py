#!/usr/bin/env python3
"""Benchmark the hot kernels with numba against the fallback paths.

The pair census falls back to a chunked numpy broadcast; the colouring
search falls back to running the identical kernel interpreted.  Selection
is the CHORDCRIT_NO_JIT environment flag, so the comparison runs each side
in its own subprocess.

Usage:
    python benchmarks/bench_kernels.py [--census-n 120] [--solver-n 7]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def run_workloads(census_n: int, solver_n: int) -> dict[str, float]:
    from chordcrit._jit import jit_active
    from chordcrit.families import gn
    from chordcrit.pairs import count_pairs
    from chordcrit.solver import SolverConfig, is_k_colorable

    # Warm up: with numba this pays the compile once, outside the timings.
    count_pairs(10)
    is_k_colorable(gn(5), 3, SolverConfig(time_budget=600))

    timings: dict[str, float] = {"jit": float(jit_active())}

    t0 = time.perf_counter()
    counts = count_pairs(census_n)
    timings[f"census n={census_n}"] = time.perf_counter() - t0
    assert counts.crossing > 0

    g = gn(solver_n)
    t0 = time.perf_counter()
    decision = is_k_colorable(g, solver_n - 3, SolverConfig(time_budget=600))
    timings[f"search G_{solver_n} at k={solver_n - 3}"] = time.perf_counter() - t0
    assert decision.status == "no"
    return timings


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--census-n", type=int, default=120)
    parser.add_argument("--solver-n", type=int, default=10)
    parser.add_argument("--emit-json", action="store_true",
                        help="run the workloads here and print timings as JSON")
    args = parser.parse_args()

    if args.emit_json:
        print(json.dumps(run_workloads(args.census_n, args.solver_n)))
        return 0

    results = {}
    for mode, no_jit in (("numba", "0"), ("fallback", "1")):
        env = dict(os.environ, CHORDCRIT_NO_JIT=no_jit)
        out = subprocess.run(
            [sys.executable, __file__, "--emit-json",
             "--census-n", str(args.census_n), "--solver-n", str(args.solver_n)],
            env=env, capture_output=True, text=True, check=True,
        )
        results[mode] = json.loads(out.stdout.strip().splitlines()[-1])

    names = [k for k in results["numba"] if k != "jit"]
    width = max(len(n) for n in names)
    print(f"{'workload':<{width}} {'numba':>10} {'fallback':>10} {'speedup':>8}")
    for name in names:
        fast = results["numba"][name]
        slow = results["fallback"][name]
        print(f"{name:<{width}} {fast:>9.3f}s {slow:>9.3f}s {slow / fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
