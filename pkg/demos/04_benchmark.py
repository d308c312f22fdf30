#!/usr/bin/env python3
"""Run a small benchmark grid and summarize it.

Each grid point draws a random source machine, samples one sequence and
times every method on that same sequence in a separate process. Pass a
path to also keep the raw CSV:

    python3 demos/04_benchmark.py results.csv
"""

import sys

import numpy as np

from minpfsa import BenchConfig, run_bench, write_csv

config = BenchConfig(
    methods=("cssr", "ip", "clique"),
    alphabets=(2, 3),
    lengths=(100, 1000),
    reps=3,
    seed=42,
    timeout=60.0,
)
print("grid: methods=%s alphabets=%s lengths=%s reps=%d" % (
    ",".join(config.methods), config.alphabets, config.lengths, config.reps))

rows = run_bench(config)

if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        write_csv(rows, fh, meta="demo grid, seed=%d" % config.seed)
    print("wrote %d rows to %s" % (len(rows), sys.argv[1]))

print("\nmedian seconds per grid cell:")
print("%8s  %3s  %6s  %10s  %6s" % ("method", "|A|", "length", "median s", "states"))
for method in config.methods:
    for a in config.alphabets:
        for n in config.lengths:
            cell = [r for r in rows
                    if r["method"] == method and r["alphabet"] == a and r["length"] == n]
            secs = np.median([r["seconds"] for r in cell])
            states = sorted({r["states"] for r in cell})
            print("%8s  %3d  %6d  %10.4f  %s" % (
                method, a, n, secs, ",".join(map(str, states))))

flagged = [r for r in rows if r["flag"] != "ok"]
print("\nflagged rows: %d" % len(flagged))
for r in flagged:
    print("  %(method)s |A|=%(alphabet)d n=%(length)d rep=%(rep)d -> %(flag)s" % r)
print("\nflags: ok, timeout, error, mismatch (cover pipeline differs from the")
print("exact search) and cssr_below_ip (heuristic under the exact optimum).")
