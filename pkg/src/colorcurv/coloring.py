"""Proper colorings of a graph viewed as a uniform finite probability space.

The index of a proper coloring ``f`` at ``x`` is computed here without
building spheres: a ``k``-simplex of ``S_f^-(x)`` is the same thing as a
``(k+1)``-clique through ``x`` on which ``x`` carries the largest color, so one
pass over the cliques per coloring gives every sub-level count at once
(see :func:`colorcurv._kernels.top_counts`). ``curvature.index`` computes the
same numbers through Euler characteristics and serves as the cross-check.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from . import _kernels
from .graph import Graph, _check_vertex, enumerate_cliques


class EmptySpaceError(ValueError):
    """Raised when statistics are requested over zero colorings."""

    def __init__(self, G: Graph, c: int):
        super().__init__(f"empty probability space: {G!r} has no proper coloring with {c} colors")
        self.c = c


@dataclass(frozen=True, eq=False)
class ColoringSpace:
    """All proper colorings of ``graph`` with colors ``1..c``.

    ``colorings`` is an ``(M, n)`` read-only int64 array in lexicographic row
    order, which is also the order of vertex-ordered backtracking.
    """

    graph: Graph
    c: int
    colorings: np.ndarray

    def __len__(self) -> int:
        return self.colorings.shape[0]

    def __iter__(self):
        for row in self.colorings:
            yield tuple(int(t) for t in row)

    @cached_property
    def top_counts(self) -> np.ndarray:
        """``(M, n, d+1)`` tallies: ``[m, x, k]`` counts ``k``-cliques topped by ``x``."""
        G = self.graph
        cliques = enumerate_cliques(G)
        verts, dims = _kernels.pack_cliques(cliques)
        out = _kernels.top_counts(self.colorings, verts, dims, G.n, max(len(cliques), 1))
        out.setflags(write=False)
        return out

    @cached_property
    def index_matrix(self) -> np.ndarray:
        """``(M, n)`` array of Poincare-Hopf indices, one row per coloring."""
        counts = self.top_counts
        signs = np.array([(-1) ** d for d in range(counts.shape[2])], dtype=np.int64)
        out = counts @ signs if counts.size else np.zeros(counts.shape[:2], dtype=np.int64)
        out.setflags(write=False)
        return out

    def require_nonempty(self) -> None:
        if len(self) == 0:
            raise EmptySpaceError(self.graph, self.c)


def _csr(G: Graph):
    return _kernels.lower_neighbors(G.n, G.edges)


@lru_cache(maxsize=64)
def enumerate_colorings(G: Graph, c: int) -> ColoringSpace:
    """Exhaustive, duplicate-free, lexicographically ordered colorings."""
    if c < 0:
        raise ValueError(f"color count must be non-negative, got {c}")
    ptr, idx = _csr(G)
    if c == 0:
        arr = np.zeros((1 if G.n == 0 else 0, G.n), dtype=np.int64)
    else:
        arr = _kernels.enumerate_colorings_array(G.n, ptr, idx, c)
    arr.setflags(write=False)
    return ColoringSpace(G, c, arr)


def count_colorings(G: Graph, c: int) -> int:
    return len(enumerate_colorings(G, c))


def clique_number(G: Graph) -> int:
    return len(enumerate_cliques(G))


def chromatic_number(G: Graph) -> int:
    """Least ``c`` admitting a proper coloring, searched upward from the clique number."""
    if G.n == 0:
        return 0
    ptr, idx = _csr(G)
    c = max(1, clique_number(G))
    while not _kernels.has_coloring(G.n, ptr, idx, c):
        c += 1
    return c


# -- chromatic polynomial ---------------------------------------------------------


class ChromaticPolynomial:
    """Integer polynomial in ascending coefficient order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(a) for a in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __eq__(self, other):
        if isinstance(other, ChromaticPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ChromaticPolynomial({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{mono}"
            terms.append(("-" if a < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _sub(p, q):
    out = list(p) + [0] * (len(q) - len(p))
    for i, b in enumerate(q):
        out[i] -= b
    return out


def _mul_linear(p, r):
    # p(x) * (x - r)
    out = [0] * (len(p) + 1)
    for i, a in enumerate(p):
        out[i + 1] += a
        out[i] -= r * a
    return out


def _falling(n):
    p = [1]
    for r in range(n):
        p = _mul_linear(p, r)
    return p


@lru_cache(maxsize=1 << 16)
def _dc(n: int, edges: frozenset) -> tuple:
    # Peel isolated vertices into an x^k factor, then compact labels.
    used = sorted({u for e in edges for u in e})
    iso = n - len(used)
    if iso:
        pos = {v: i for i, v in enumerate(used)}
        core = _dc(len(used), frozenset((pos[u], pos[v]) for u, v in edges))
        return (0,) * iso + core
    if not edges:
        return (1,)
    if len(edges) == n * (n - 1) // 2:
        return tuple(_falling(n))
    deg = Counter(u for e in edges for u in e)
    # branch on an edge at a minimum-degree vertex
    w = min(deg, key=lambda t: (deg[t], t))
    u, v = min(e for e in edges if w in e)
    rest = edges - {(u, v)}
    deleted = _dc(n, rest)

    def relabel(t):
        t = u if t == v else t
        return t - 1 if t > v else t

    merged = frozenset(
        (min(a, b), max(a, b)) for a, b in ((relabel(a), relabel(b)) for a, b in rest) if a != b
    )
    contracted = _dc(n - 1, merged)
    return tuple(_sub(deleted, contracted))


def chromatic_polynomial(G: Graph) -> ChromaticPolynomial:
    """Chromatic polynomial by deletion-contraction ``C(G) = C(G-e) - C(G/e)``."""
    return ChromaticPolynomial(_dc(G.n, frozenset(G.edges)))


# -- statistics over the space ---------------------------------------------------------


def _space(G: Graph, c: int) -> ColoringSpace:
    space = enumerate_colorings(G, c)
    space.require_nonempty()
    return space


def index_expectation(G: Graph, c: int) -> list[Fraction]:
    space = _space(G, c)
    M = len(space)
    return [Fraction(int(s), M) for s in space.index_matrix.sum(axis=0)]


def sublevel_count_expectation(G: Graph, c: int, x: int, k: int) -> Fraction:
    """Mean number of ``k``-simplices of ``S_f^-(x)`` over all colorings."""
    _check_vertex(G, x)
    space = _space(G, c)
    counts = space.top_counts
    if k < 0 or k + 1 >= counts.shape[2]:
        return Fraction(0)
    return Fraction(int(counts[:, x, k + 1].sum()), len(space))


@dataclass(frozen=True)
class Moments:
    """``per_vertex[x][k-1] = a_k(x)`` and ``total[k-1] = a_k``."""

    per_vertex: list
    total: list


def index_moments(G: Graph, c: int, max_k: int) -> Moments:
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    space = _space(G, c)
    M = len(space)
    table = space.index_matrix
    per_vertex = []
    for x in range(G.n):
        vals, freq = np.unique(table[:, x], return_counts=True)
        pairs = [(int(v), int(f)) for v, f in zip(vals, freq)]
        per_vertex.append([Fraction(sum(f * v**k for v, f in pairs), M) for k in range(1, max_k + 1)])
    total = [sum((row[k] for row in per_vertex), Fraction(0)) for k in range(max_k)]
    return Moments(per_vertex, total)


def index_variance(G: Graph, c: int) -> list[Fraction]:
    m = index_moments(G, c, 2)
    return [a2 - a1 * a1 for a1, a2 in m.per_vertex]


def sqrt_decimal(q: Fraction, prec: int = 40) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = prec
        return (Decimal(q.numerator) / Decimal(q.denominator)).sqrt()


def index_stddev(G: Graph, c: int) -> list[float]:
    """Per-vertex standard deviation of ``f -> i_f(x)``, from the exact variance."""
    return [float(sqrt_decimal(v)) for v in index_variance(G, c)]


def round_stddev(G: Graph, c: int, places: int = 3) -> list[Decimal]:
    quantum = Decimal(1).scaleb(-places)
    return [sqrt_decimal(v).quantize(quantum, rounding=ROUND_HALF_EVEN) for v in index_variance(G, c)]


def richness(G: Graph) -> Fraction:
    """``C(c) / c!`` at the chromatic number; 1 means chromatically poor."""
    if G.n == 0:
        raise ValueError("richness needs at least one vertex")
    c = chromatic_number(G)
    return Fraction(count_colorings(G, c), math.factorial(c))


def color_orbits(space: ColoringSpace) -> list[int]:
    """Orbit sizes of the color-permutation action, in first-seen order.

    Colorings in one orbit share the pattern obtained by renaming colors in
    order of first appearance.
    """
    sizes: dict[tuple, int] = {}
    for row in space:
        seen: dict[int, int] = {}
        key = tuple(seen.setdefault(t, len(seen)) for t in row)
        sizes[key] = sizes.get(key, 0) + 1
    return list(sizes.values())
