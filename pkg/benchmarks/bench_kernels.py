"""Compare the numba-compiled kernels with their plain Python / numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

Backtracking: exhaustive infeasibility proofs one below the lower bound.
Brute force: the numba scalar scan vs the vectorized numpy scan.
"""
import argparse
import time

import numpy as np

from cyclestar.graph import build_cycle_star
from cyclestar.solver import Solver, brute_force_es
from cyclestar.solver import kernels
from cyclestar.solver._accel import USE_NUMBA
from cyclestar.verifier import lower_bound

BACKTRACK_CASES = [(7, 5), (6, 6), (9, 3)]
BRUTE_CASES = [(4, 3), (5, 3), (3, 5)]


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _exhaust(kernel, solver, k):
    n = solver.graph.num_vertices
    labels = np.zeros(n, dtype=np.int64)
    used = np.zeros(2 * k + 1, dtype=np.int8)
    state = np.zeros(2, dtype=np.int64)
    status = kernel(solver._nbr_ptr, solver._nbr_pos, solver._twin_prev, k,
                    labels, used, state, -1)
    return status, int(state[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not USE_NUMBA:
        print("numba disabled (CYCLESTAR_DISABLE_NUMBA); both columns run the fallback")

    print(f"{'backtracking':<14}{'nodes':>10}{'jit s':>10}{'python s':>10}{'speedup':>9}")
    for spec in BACKTRACK_CASES:
        solver = Solver(build_cycle_star(spec))
        k = lower_bound(solver.graph) - 1
        _exhaust(kernels.backtrack, solver, k)  # warm-up / compile
        t_jit, (st1, nodes) = _best(lambda: _exhaust(kernels.backtrack, solver, k), args.repeat)
        t_py, (st2, nodes2) = _best(lambda: _exhaust(kernels.backtrack.py_func, solver, k), 1)
        assert (st1, nodes) == (st2, nodes2) and st1 == kernels.EXHAUSTED
        print(f"CS{spec!s:<12}{nodes:>10}{t_jit:>10.4f}{t_py:>10.3f}{t_py / t_jit:>8.0f}x")

    print(f"\n{'brute force':<14}{'labelings':>10}{'jit s':>10}{'numpy s':>10}{'speedup':>9}")
    for spec in BRUTE_CASES:
        g = build_cycle_star(spec)
        brute_force_es(g, vectorized=False)
        t_jit, a = _best(lambda: brute_force_es(g, vectorized=False), args.repeat)
        t_np, b = _best(lambda: brute_force_es(g, vectorized=True), args.repeat)
        assert (a.es_value, a.nodes_explored) == (b.es_value, b.nodes_explored)
        print(f"CS{spec!s:<12}{a.nodes_explored:>10}{t_jit:>10.4f}{t_np:>10.4f}"
              f"{t_np / t_jit:>8.1f}x")


if __name__ == "__main__":
    main()
