"""Benchmark the two GF(p) kernel lanes against each other.

Runs the same elimination workloads through the compiled extension and the
pure numpy fallback, asserts the outputs are bit-identical, and prints a
timing table.  Usage:

    python3 benchmarks/bench_gf.py [--repeat N]
"""

import argparse
import time

import numpy as np

from spechtinv import gfp
from spechtinv import _gfcore_py

try:
    from spechtinv import _gfcore
except ImportError:
    _gfcore = None


def _workloads(rng):
    yield "rref 200x200 p=5", 5, rng.integers(0, 5, size=(200, 200))
    yield "rref 600x400 p=3", 3, rng.integers(0, 3, size=(600, 400))
    yield "kernel 300x500 p=7", 7, rng.integers(0, 7, size=(300, 500))
    low = rng.integers(0, 5, size=(500, 120))
    lift = rng.integers(0, 5, size=(120, 500))
    yield "rref 500x500 rank<=120 p=5", 5, (low @ lift) % 5


def _run(core, name, p, a, repeat):
    saved = gfp._core
    gfp._core = core
    try:
        best = None
        out = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            if name.startswith("kernel"):
                out = gfp.kernel_basis(a, p)
            else:
                out = gfp.rref(a, p)
            dt = time.perf_counter() - t0
            best = dt if best is None else min(best, dt)
        return best, out
    finally:
        gfp._core = saved


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    lanes = [("python", _gfcore_py)]
    if _gfcore is not None:
        lanes.insert(0, ("compiled", _gfcore))
    else:
        print("compiled lane not importable, timing the python lane only")

    rng = np.random.default_rng(20260823)
    rows = []
    for name, p, a in _workloads(rng):
        outs = {}
        times = {}
        for lane, core in lanes:
            times[lane], outs[lane] = _run(core, name, p, a, args.repeat)
        if len(lanes) == 2:
            ref, alt = outs["compiled"], outs["python"]
            if isinstance(ref, tuple):
                assert np.array_equal(ref[0], alt[0]) and ref[1] == alt[1], name
            else:
                assert np.array_equal(ref, alt), name
        rows.append((name, times))

    width = max(len(r[0]) for r in rows)
    header = "workload".ljust(width) + "".join(
        "  %10s" % lane for lane, _ in lanes)
    if len(lanes) == 2:
        header += "  %8s" % "speedup"
    print(header)
    for name, times in rows:
        line = name.ljust(width)
        for lane, _ in lanes:
            line += "  %9.4fs" % times[lane]
        if len(lanes) == 2:
            line += "  %7.2fx" % (times["python"] / times["compiled"])
        print(line)
    if len(lanes) == 2:
        print("outputs bit-identical on both lanes for every workload")


if __name__ == "__main__":
    main()
