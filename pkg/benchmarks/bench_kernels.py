"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends run in the same process; outputs are compared before timing.
"""

import argparse
import time

import numpy as np

from colorcurv import _kernels
from colorcurv.generators import erdos_renyi, fig6, octahedron, wheel
from colorcurv.graph import enumerate_cliques

CASES = [
    ("octahedron", octahedron(), 4),
    ("wheel(6)", wheel(6), 4),
    ("fig6", fig6(), 4),
    ("fig6", fig6(), 5),
    ("fig6", fig6(), 6),
    ("G(10,1/2,7)", erdos_renyi(10, 1, 2, 7), 6),
    ("G(12,1/3,11)", erdos_renyi(12, 1, 3, 11), 5),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'graph':<14}{'c':>3}{'colorings':>11}   {'enum numba':>11}{'enum numpy':>11}   {'tops numba':>11}{'tops numpy':>11}")
    for name, G, c in CASES:
        ptr, idx = _kernels.lower_neighbors(G.n, G.edges)
        cliques = enumerate_cliques(G)
        verts, dims = _kernels.pack_cliques(cliques)
        depth = len(cliques)

        a = _kernels.enumerate_colorings_array(G.n, ptr, idx, c, use_numba=True)
        b = _kernels.enumerate_colorings_array(G.n, ptr, idx, c, use_numba=False)
        assert np.array_equal(a, b), name
        ta = _kernels.top_counts(a, verts, dims, G.n, depth, use_numba=True)
        tb = _kernels.top_counts(a, verts, dims, G.n, depth, use_numba=False)
        assert np.array_equal(ta, tb), name

        row = [
            best_of(lambda u=u: _kernels.enumerate_colorings_array(G.n, ptr, idx, c, use_numba=u), args.repeat)
            for u in (True, False)
        ] + [
            best_of(lambda u=u: _kernels.top_counts(a, verts, dims, G.n, depth, use_numba=u), args.repeat)
            for u in (True, False)
        ]
        ms = "".join(f"{1e3 * t:>9.2f}ms" for t in row[:2]) + "   " + "".join(f"{1e3 * t:>9.2f}ms" for t in row[2:])
        print(f"{name:<14}{c:>3}{len(a):>11}   {ms}")


if __name__ == "__main__":
    main()
