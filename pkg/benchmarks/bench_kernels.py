"""Time each hot kernel in its numba and pure-numpy form on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Results are checked for equality before timing; numba compile time is
excluded by a warm-up call.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from bei_lab import _kernels as K
from bei_lab.edge_ideals import binomial_edge_ideal
from bei_lab.graph import Graph, enumerate_connected_graphs
from bei_lab.groebner import buchberger, initial_ideal
from bei_lab.homology import stanley_reisner_complex

P = 32003


def _workloads():
    graphs7 = [np.asarray(G.adj, dtype=np.int64) for G in enumerate_connected_graphs(7)[::8]]
    rng = np.random.default_rng(0)
    mats = [rng.integers(0, P, size=(60, 80), dtype=np.int64) for _ in range(20)]
    # Stanley-Reisner complex of in_lex(J_G) for the 6-vertex path (12 variables)
    J = binomial_edge_ideal(Graph.path(6))
    cx, _ = stanley_reisner_complex(initial_ideal(buchberger(J.gens, J.ring)))
    sr = np.asarray(cx.nonfaces, dtype=np.int64)
    return [
        ("longest_induced_path n=7", lambda f: [f(a, 7) for a in graphs7],
         K._nb_longest_induced_path, K._np_longest_induced_path),
        ("longest_induced_cycle n=7", lambda f: [f(a, 7) for a in graphs7],
         K._nb_longest_induced_cycle, K._np_longest_induced_cycle),
        ("canonical_code n=7", lambda f: [f(a, 7) for a in graphs7[:40]],
         K._nb_canonical_code, K._np_canonical_code),
        ("rank_mod_p 60x80", lambda f: [f(m.copy(), P) for m in mats],
         K._nb_rank_mod_p, K._np_rank_mod_p),
        ("hochster 12 vars", lambda f: f(sr, cx.N, P),
         K._nb_hochster,
         lambda g, N, p: K.hochster_betti_py(list(g), N, lambda M: K._np_rank_mod_p(M, p) if M and M[0] else 0)),
    ]


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def _same(a, b) -> bool:
    return np.array_equal(np.asarray(a), np.asarray(b))


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if K.numba is None:
        raise SystemExit("numba is not installed; nothing to compare")
    print(f"{'kernel':<28}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for name, run, nb, py in _workloads():
        run(nb)  # compile
        t_nb, r_nb = _best(lambda: run(nb), args.repeat)
        t_py, r_py = _best(lambda: run(py), max(1, args.repeat // 2))
        if not _same(r_nb, r_py):
            raise SystemExit(f"{name}: numba and numpy results differ")
        print(f"{name:<28}{t_nb * 1e3:>12.2f}{t_py * 1e3:>12.2f}{t_py / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
