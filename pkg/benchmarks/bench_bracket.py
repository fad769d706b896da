"""Time the bracket state-histogram kernel: numba against the numpy fallback.

    python3 benchmarks/bench_bracket.py [--max-crossings 15] [--repeat 3]

Both kernels are run on the same diagrams and their histograms compared, so a
timing row is only printed for results that agree.
"""

from __future__ import annotations

import argparse
import time
from functools import partial

import numpy as np

from regionum import _kernels
from regionum.diagram import connected_sum, gen_torus
from regionum.table import lookup


def workload(max_crossings: int):
    out = [(f"T(2,{2 * k + 1})", gen_torus(k)) for k in range(2, 8)]
    out += [("9_35", lookup("9_35").diagram), ("8_19", lookup("8_19").diagram)]
    out.append(("7_4 # 7_7", connected_sum(lookup("7_4").diagram, lookup("7_7").diagram)))
    return [(name, d) for name, d in out if d.crossing_count <= max_crossings]


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=15)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is unavailable or disabled by REGIONUM_NO_NUMBA")
    # compile outside the timed region
    _kernels.state_histogram(gen_torus(1).pd(), use_numba=True)

    print(f"{'diagram':<12}{'c':>4}{'states':>9}{'numba s':>11}{'numpy s':>11}{'speedup':>9}")
    for name, d in workload(args.max_crossings):
        pd = d.pd()
        fast = _kernels.state_histogram(pd, use_numba=True)
        slow = _kernels.state_histogram(pd, use_numba=False)
        if not np.array_equal(fast, slow):
            raise SystemExit(f"kernels disagree on {name}")
        t_fast = best_of(partial(_kernels.state_histogram, pd, use_numba=True), args.repeat)
        t_slow = best_of(partial(_kernels.state_histogram, pd, use_numba=False), args.repeat)
        print(
            f"{name:<12}{d.crossing_count:>4}{2 ** d.crossing_count:>9}"
            f"{t_fast:>11.4f}{t_slow:>11.4f}{t_slow / t_fast:>8.1f}x"
        )


if __name__ == "__main__":
    main()
