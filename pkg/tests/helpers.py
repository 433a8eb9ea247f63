"""Shared graph fixtures and hypothesis strategies."""

from pathlib import Path

from hypothesis import strategies as st

from colorcurv.generators import (
    complete,
    cycle,
    cytosine,
    diamond,
    erdos_renyi,
    fig6,
    house,
    octahedron,
    path,
    star,
    wheel,
)
from colorcurv.graph import build_graph

DATA = Path(__file__).parent / "data"

FIXTURES = {
    "diamond": diamond(),
    "house": house(),
    "octahedron": octahedron(),
    "wheel4": wheel(4),
    "wheel5": wheel(5),
    "cycle4": cycle(4),
    "cycle5": cycle(5),
    "path5": path(5),
    "star6": star(6),
    "complete4": complete(4),
    "fig6": fig6(),
    "cytosine": cytosine(),
}


def seeded_graphs(count, max_n, p_num=1, p_den=2, min_n=1):
    """Deterministic G(n, p) ensemble with n cycling through min_n..max_n."""
    span = max_n - min_n + 1
    return [erdos_renyi(min_n + s % span, p_num, p_den, 1000 + s) for s in range(count)]


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, mask) if keep])
