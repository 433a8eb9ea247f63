"""Named small graphs, classic families, and seeded random graphs.

Random graphs use SplitMix64 so any implementation can reproduce them::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

``erdos_renyi(n, p_num, p_den, seed)`` seeds the state with ``seed`` and
visits pairs ``(i, j)``, ``i < j``, in lexicographic order, adding the edge
when ``next() % p_den < p_num``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .graph import Graph, GraphInputError, build_graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete", "n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle", "n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "path", "n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices: hub 0 joined to leaves ``1..n-1``."""
    _need(n >= 1, "star", "n >= 1")
    return build_graph(n, [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    """Rim cycle ``1..n`` plus hub 0 adjacent to every rim vertex."""
    _need(n >= 3, "wheel", "n >= 3")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return build_graph(n + 1, rim + [(0, i) for i in range(1, n + 1)])


def octahedron() -> Graph:
    # K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5)
    return build_graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 1 or i % 2])


def diamond() -> Graph:
    # K_4 minus the edge 1-3; vertices 0 and 2 have degree 3
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])


def house() -> Graph:
    # square A-C-D-B-A, apex E on C and D; A..E = 0..4
    A, B, C, D, E = range(5)
    return build_graph(5, [(A, C), (C, D), (D, B), (B, A), (C, E), (D, E)])


FIG6_EDGES_1BASED = (
    (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 6), (2, 9), (2, 10),
    (3, 4), (3, 8), (3, 10), (4, 6), (4, 7), (4, 8), (5, 7), (5, 8), (5, 9),
    (5, 10), (6, 7), (6, 8), (7, 8), (7, 10), (8, 10), (9, 10),
)


def fig6() -> Graph:
    """The 10-vertex random graph with 72 proper 4-colorings."""
    return build_graph(10, [(u - 1, v - 1) for u, v in FIG6_EDGES_1BASED])


CYTOSINE_ATOMS = ("N1", "C2", "N3", "C4", "C5", "C6", "O2", "N4", "H1", "H5", "H6", "H4a", "H4b")
CYTOSINE_BONDS = (
    ("N1", "C2"), ("C2", "N3"), ("N3", "C4"), ("C4", "C5"), ("C5", "C6"), ("C6", "N1"),
    ("C2", "O2"), ("C4", "N4"), ("N1", "H1"), ("C5", "H5"), ("C6", "H6"),
    ("N4", "H4a"), ("N4", "H4b"),
)


def cytosine() -> Graph:
    """Heavy atoms and hydrogens of cytosine, bonds as edges (bond order ignored)."""
    pos = {a: i for i, a in enumerate(CYTOSINE_ATOMS)}
    return build_graph(len(CYTOSINE_ATOMS), [(pos[a], pos[b]) for a, b in CYTOSINE_BONDS])


def erdos_renyi(n: int, p_num: int, p_den: int, seed: int) -> Graph:
    _need(n >= 0, "erdos_renyi", "n >= 0")
    _need(p_den >= 1 and 0 <= p_num <= p_den, "erdos_renyi", "0 <= p_num <= p_den, p_den >= 1")
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next() % p_den < p_num:
                edges.append((i, j))
    return build_graph(n, edges)


def _need(ok: bool, name: str, what: str) -> None:
    if not ok:
        raise GraphInputError(f"{name}: invalid parameters, need {what}")


REGISTRY = {
    "complete": (complete, ("n",)),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "star": (star, ("n",)),
    "wheel": (wheel, ("n",)),
    "octahedron": (octahedron, ()),
    "diamond": (diamond, ()),
    "house": (house, ()),
    "fig6": (fig6, ()),
    "cytosine": (cytosine, ()),
    "erdos_renyi": (erdos_renyi, ("n", "p_num", "p_den", "seed")),
}


@dataclass(frozen=True)
class GraphSpec:
    name: str
    params: tuple = field(default=())


def gen_named(spec: GraphSpec | str, *params: int) -> Graph:
    if isinstance(spec, str):
        spec = GraphSpec(spec, tuple(params))
    try:
        fn, names = REGISTRY[spec.name]
    except KeyError:
        raise GraphInputError(f"unknown generator {spec.name!r}; choose from {', '.join(REGISTRY)}") from None
    if len(spec.params) != len(names):
        raise GraphInputError(f"{spec.name} takes {len(names)} parameter(s) ({' '.join(names) or 'none'}), got {len(spec.params)}")
    try:
        args = [int(p) for p in spec.params]
    except (TypeError, ValueError):
        raise GraphInputError(f"{spec.name}: parameters must be integers, got {spec.params!r}") from None
    return fn(*args)


def inductive_dimension(G: Graph) -> Fraction:
    """``dim(G) = 1 + mean_x dim(S(x))`` with ``dim(empty) = -1``.

    Spheres of induced subgraphs are again induced subgraphs of ``G``, so
    subproblems are memoized by their vertex bitmask.
    """
    masks = G.masks

    @lru_cache(maxsize=None)
    def dim(S: int) -> Fraction:
        if S == 0:
            return Fraction(-1)
        total = Fraction(0)
        k = 0
        rest = S
        while rest:
            low = rest & -rest
            rest ^= low
            total += dim(masks[low.bit_length() - 1] & S)
            k += 1
        return 1 + total / k

    return dim((1 << G.n) - 1)
