"""Brute-force references, deliberately independent of the library's algorithms."""

from fractions import Fraction
from itertools import combinations, product


def adjacent(edges):
    s = set()
    for u, v in edges:
        s.add((u, v))
        s.add((v, u))
    return s


def brute_cliques(n, edges):
    """Every vertex subset tested pairwise; grouped by size, lexicographic."""
    adj = adjacent(edges)
    out = []
    for size in range(1, n + 1):
        level = [c for c in combinations(range(n), size) if all((a, b) in adj for a, b in combinations(c, 2))]
        if not level:
            break
        out.append(level)
    return out


def brute_chi(vertices, edges):
    adj = adjacent(edges)
    vs = sorted(vertices)
    chi = 0
    for size in range(1, len(vs) + 1):
        cnt = sum(1 for c in combinations(vs, size) if all((a, b) in adj for a, b in combinations(c, 2)))
        if cnt == 0:
            break
        chi += (-1) ** (size - 1) * cnt
    return chi


def brute_index(n, edges, f, x):
    adj = adjacent(edges)
    below = [y for y in range(n) if (x, y) in adj and f[y] < f[x]]
    return 1 - brute_chi(below, edges)


def brute_colorings(n, edges, c):
    """Filter the full product {1..c}^n; product order is lexicographic."""
    return [f for f in product(range(1, c + 1), repeat=n) if all(f[u] != f[v] for u, v in edges)]


def brute_curvature(n, edges, x):
    adj = adjacent(edges)
    nbrs = [y for y in range(n) if (x, y) in adj]
    K = Fraction(1)
    for size in range(1, len(nbrs) + 1):
        cnt = sum(1 for c in combinations(nbrs, size) if all((a, b) in adj for a, b in combinations(c, 2)))
        K += Fraction((-1) ** size * cnt, size + 1)
    return K


def brute_sublevel_mean(n, edges, c, x, k):
    """Mean number of k-simplices of S_f^-(x), averaging over all proper c-colorings."""
    adj = adjacent(edges)
    nbrs = [y for y in range(n) if (x, y) in adj]
    cols = brute_colorings(n, edges, c)
    total = 0
    for f in cols:
        below = [y for y in nbrs if f[y] < f[x]]
        total += sum(1 for s in combinations(below, k + 1) if all((a, b) in adj for a, b in combinations(s, 2)))
    return Fraction(total, len(cols))
