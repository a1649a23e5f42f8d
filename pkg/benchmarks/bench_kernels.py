#!/usr/bin/env python3
"""Timing comparison between the pure-Python and compiled kernel backends.

Measures the three hot paths: scalar objective evaluation in a tight loop,
a full golden-section oracle run, and the batched clock-profile sweep.

    python benchmarks/bench_kernels.py [--scalar-calls N] [--batch-size N]
"""
import argparse
import math
import time
from array import array

import chronobound._kernels_py as kernels_py
from chronobound.minimize import Bracket, minimize_unimodal

try:
    import chronobound._kernels_cy as kernels_cy
except ImportError:
    kernels_cy = None


def best_of(repeats, fn):
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        timings.append(time.perf_counter() - start)
    return min(timings) * 1e3


def bench_scalar(impl, xs, t, v):
    objective = impl.constrained_objective
    total = 0.0
    for x in xs:
        total += objective(x, t, v)
    return total


def bench_oracle(impl, t, v):
    return minimize_unimodal(lambda x: impl.constrained_objective(x, t, v),
                             Bracket(1.0, 1e30), rel_tol=1e-9)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scalar-calls", type=int, default=200_000)
    parser.add_argument("--batch-size", type=int, default=1_000_000)
    parser.add_argument("--oracle-runs", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    t_target = 1.854858630362117e43  # one second, in Planck times
    xs = [math.exp(math.log(1e3) + i * (math.log(1e20) - math.log(1e3))
                   / (args.scalar_calls - 1))
          for i in range(args.scalar_calls)]
    ts = array("d", (math.exp(math.log(1e34) + i * 20.0 / args.batch_size)
                     for i in range(args.batch_size)))

    rows = []

    def add(name, py_ms, cy_ms):
        speedup = "" if cy_ms is None else f"{py_ms / cy_ms:6.1f}x"
        cy_text = "n/a" if cy_ms is None else f"{cy_ms:10.2f}"
        rows.append((name, f"{py_ms:10.2f}", cy_text, speedup))

    py_ms = best_of(args.repeats,
                    lambda: bench_scalar(kernels_py, xs, t_target, 1.0))
    cy_ms = None if kernels_cy is None else best_of(
        args.repeats, lambda: bench_scalar(kernels_cy, xs, t_target, 1.0))
    add(f"scalar objective x{args.scalar_calls}", py_ms, cy_ms)

    def oracle_loop(impl):
        for i in range(args.oracle_runs):
            bench_oracle(impl, t_target * (1.0 + i), 1.0)

    py_ms = best_of(args.repeats, lambda: oracle_loop(kernels_py))
    cy_ms = None if kernels_cy is None else best_of(
        args.repeats, lambda: oracle_loop(kernels_cy))
    add(f"golden-section oracle x{args.oracle_runs}", py_ms, cy_ms)

    py_ms = best_of(args.repeats,
                    lambda: kernels_py.clock_profile_batch(ts))
    cy_ms = None if kernels_cy is None else best_of(
        args.repeats, lambda: kernels_cy.clock_profile_batch(ts))
    add(f"clock profile batch x{args.batch_size}", py_ms, cy_ms)

    header = ("benchmark", "python ms", "compiled ms", "speedup")
    widths = [max(len(header[i]), *(len(r[i]) for r in rows))
              for i in range(4)]
    print("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)))
    for row in rows:
        print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    if kernels_cy is None:
        print("\ncompiled backend not built; showing pure Python only")

    # Guard against the two backends drifting apart.
    check = 1e40
    drift = abs(kernels_py.fundamental_bound(check)
                - (kernels_cy.fundamental_bound(check) if kernels_cy
                   else kernels_py.fundamental_bound(check)))
    assert drift <= 1e-12 * kernels_py.fundamental_bound(check)


if __name__ == "__main__":
    main()
