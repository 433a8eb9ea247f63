"""Finite simple graphs and their clique complexes.

Vertices are the dense integers ``0..n-1``. Adjacency is kept both as sorted
neighbor tuples and as Python-int bitmasks; the bitmasks have no width limit,
so the same clique code serves small and large graphs.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence


class GraphInputError(ValueError):
    """Malformed vertex count or edge list."""


class Graph:
    """Immutable finite simple graph.

    Build instances with :func:`build_graph` (which normalizes the edge list)
    or directly from an already normalized, sorted tuple of ``(u, v)`` pairs
    with ``u < v``.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        edges = tuple(sorted(set((int(u), int(v)) for u, v in edges)))
        for u, v in edges:
            if not (0 <= u < v < n):
                raise GraphInputError(f"edge ({u}, {v}) is not a normalized pair in 0..{n - 1}")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", edges)
        # original vertex ids when this graph is an induced subgraph
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph on ``vertices`` relabeled to ``0..k-1``.

        The returned graph's ``labels`` maps new ids back to ids in ``self``.
        """
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vs), edges, labels=vs)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def build_graph(n: int, edge_list: Iterable[Sequence[int]] = ()) -> Graph:
    """Normalize an edge list into a :class:`Graph`.

    Either endpoint order and duplicate edges are accepted; self-loops and
    out-of-range endpoints raise :class:`GraphInputError`.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise GraphInputError(f"vertex count must be a non-negative integer, got {n!r}")
    pairs = set()
    for e in edge_list:
        if len(e) != 2:
            raise GraphInputError(f"edge {e!r} does not have two endpoints")
        u, v = (int(t) for t in e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        pairs.add((min(u, v), max(u, v)))
    return Graph(n, pairs)


def graph_from_json(data: dict) -> Graph:
    try:
        return build_graph(data["n"], data.get("edges", []))
    except (KeyError, TypeError, AttributeError) as exc:
        raise GraphInputError(f"not a graph document: {exc}") from exc


def _check_vertex(G: Graph, x: int) -> None:
    if not 0 <= x < G.n:
        raise GraphInputError(f"vertex {x} out of range 0..{G.n - 1}")


def enumerate_cliques(G: Graph) -> list[list[tuple[int, ...]]]:
    """All cliques of ``G`` grouped by dimension.

    ``result[k]`` lists the ``(k+1)``-cliques as increasing vertex tuples in
    lexicographic order. Cliques are grown only toward higher-indexed
    vertices, so each is produced once.
    """
    masks = G.masks
    by_dim: list[list[tuple[int, ...]]] = []

    def grow(clique: list[int], cand: int) -> None:
        k = len(clique) - 1
        if k == len(by_dim):
            by_dim.append([])
        by_dim[k].append(tuple(clique))
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique.append(v)
            grow(clique, cand & masks[v])
            clique.pop()

    for v in range(G.n):
        # only higher neighbors
        grow([v], masks[v] >> (v + 1) << (v + 1))
    return by_dim


def f_vector(G: Graph) -> tuple[int, ...]:
    """Clique counts ``(v_0, v_1, ..., v_d)``; empty for the empty graph."""
    counts: list[int] = []
    masks = G.masks

    def grow(k: int, cand: int) -> None:
        if k == len(counts):
            counts.append(0)
        counts[k] += 1
        while cand:
            low = cand & -cand
            cand ^= low
            grow(k + 1, cand & masks[low.bit_length() - 1])

    for v in range(G.n):
        grow(0, masks[v] >> (v + 1) << (v + 1))
    return tuple(counts)


def euler_characteristic(G: Graph) -> int:
    return sum((-1) ** k * v for k, v in enumerate(f_vector(G)))


def unit_sphere(G: Graph, x: int) -> Graph:
    _check_vertex(G, x)
    return G.induced(G.adjacency[x])


def sub_sphere(G: Graph, f: Sequence, x: int, reverse: bool = False) -> Graph:
    """Induced subgraph on the neighbors ``y`` of ``x`` with ``f(y) < f(x)``.

    With ``reverse`` the comparison flips, which is the sphere of ``-f``.
    """
    _check_vertex(G, x)
    if len(f) != G.n:
        raise GraphInputError(f"function has {len(f)} values for {G.n} vertices")
    fx = f[x]
    if reverse:
        below = [y for y in G.adjacency[x] if f[y] > fx]
    else:
        below = [y for y in G.adjacency[x] if f[y] < fx]
    return G.induced(below)


def local_clique_vector(G: Graph, x: int) -> tuple[int, ...]:
    """``(V_0(x), V_1(x), ...)``: clique counts of the unit sphere at ``x``."""
    return f_vector(unit_sphere(G, x))


def handshake_check(G: Graph) -> bool:
    """Check ``sum_x V_{k-1}(x) == (k+1) v_k`` for every ``k >= 1``."""
    v = f_vector(G)
    totals = [0] * len(v)
    for x in range(G.n):
        for k, c in enumerate(local_clique_vector(G, x)):
            if k + 1 >= len(totals):
                return False
            totals[k + 1] += c
    return all(totals[k] == (k + 1) * v[k] for k in range(1, len(v)))
