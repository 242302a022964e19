"""Compare the compiled and pure-Python map-search kernels.

    python3 benchmarks/bench_search.py [--repeat N]

Each row enumerates every morphism of a kind between two catalog modules with
both backends, checks that the solution lists agree, and reports wall time.
"""

from __future__ import annotations

import argparse
import sys
import time

from systemic.instances import get_instance
from systemic.modules import free_module, system_module
from systemic.search import MapProblem, available_backends, run

CASES = [
    ("supertrop-B", 2, 2, "homomorphism"),
    ("supertrop-B", 2, 2, "preceq"),
    ("supertrop-B", 2, 3, "preceq"),
    ("sym-bool", 2, 2, "preceq"),
    ("sym-supertrop-B", 1, 2, "preceq"),
    ("krasner-hs", 2, 2, "succeq"),
]


def _time(problem, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        sols, evals, exhausted = run(problem, backend=backend)
        best = min(best, time.perf_counter() - t)
    return best, sols, evals, exhausted


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernel not available; only the Python backend is timed")
    print(f"{'system':<16} {'src':>3} {'tgt':>3} {'kind':<13} {'maps':>7} {'evals':>9} "
          + " ".join(f"{b + ' s':>10}" for b in backends) + ("   speedup" if len(backends) > 1 else ""))
    status = 0
    for name, r_src, r_tgt, kind in CASES:
        S = get_instance(name)
        M = free_module(S, r_src) if r_src > 1 else system_module(S)
        N = free_module(S, r_tgt)
        problem = MapProblem(M, N, kind)
        times, results = [], []
        for b in backends:
            dt, sols, evals, exhausted = _time(problem, b, args.repeat)
            times.append(dt)
            results.append((sols, evals, exhausted))
        if any(r[0] != results[0][0] for r in results):
            print(f"MISMATCH on {name} {kind}", file=sys.stderr)
            status = 1
        sols, evals, exhausted = results[0]
        row = (f"{name:<16} {M.size:>3} {N.size:>3} {kind:<13} {len(sols):>7} {evals:>9} "
               + " ".join(f"{t:>10.4f}" for t in times))
        if len(times) > 1:
            row += f"   {times[0] / max(times[1], 1e-9):>6.1f}x"
        print(row + ("  (budget)" if exhausted else ""))
    return status


if __name__ == "__main__":
    sys.exit(main())
