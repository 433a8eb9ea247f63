"""Curvature, Poincare-Hopf indices and the identities tying them to ``chi``.

Everything here is exact: curvatures are :class:`fractions.Fraction`,
indices and Euler characteristics are ``int``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .graph import (
    Graph,
    _check_vertex,
    euler_characteristic,
    local_clique_vector,
    sub_sphere,
)


class LocalInjectivityError(ValueError):
    """A vertex shares its function value with a neighbor."""

    def __init__(self, x: int, y: int):
        super().__init__(f"function is not locally injective at vertex {x} (tie with neighbor {y})")
        self.vertex = x
        self.neighbor = y


def curvature(G: Graph, x: int) -> Fraction:
    """``K(x) = sum_k (-1)^k V_{k-1}(x) / (k+1)`` with ``V_{-1}(x) = 1``."""
    _check_vertex(G, x)
    K = Fraction(1)
    for k, count in enumerate(local_clique_vector(G, x), start=1):
        K += Fraction((-1) ** k * count, k + 1)
    return K


def curvatures(G: Graph) -> list[Fraction]:
    return [curvature(G, x) for x in range(G.n)]


def gauss_bonnet_check(G: Graph, curvature_fn=curvature) -> tuple[Fraction, bool]:
    total = sum((curvature_fn(G, x) for x in range(G.n)), Fraction(0))
    return total, total == euler_characteristic(G)


def check_local_injectivity(G: Graph, f: Sequence, x: int) -> None:
    fx = f[x]
    for y in G.adjacency[x]:
        if f[y] == fx:
            raise LocalInjectivityError(x, y)


def is_locally_injective(G: Graph, f: Sequence) -> bool:
    if len(f) != G.n:
        return False
    return all(f[u] != f[v] for u, v in G.edges)


def index(G: Graph, f: Sequence, x: int, reverse: bool = False) -> int:
    """Poincare-Hopf index ``1 - chi(S_f^-(x))``.

    ``reverse=True`` gives the index of ``-f`` (neighbors above ``x`` count).
    Raises :class:`LocalInjectivityError` if a neighbor ties with ``x``.
    """
    _check_vertex(G, x)
    check_local_injectivity(G, f, x)
    return 1 - euler_characteristic(sub_sphere(G, f, x, reverse=reverse))


def indices(G: Graph, f: Sequence, reverse: bool = False) -> list[int]:
    return [index(G, f, x, reverse=reverse) for x in range(G.n)]


def poincare_hopf_check(G: Graph, f: Sequence) -> tuple[int, bool]:
    total = sum(indices(G, f))
    return total, total == euler_characteristic(G)


def symmetric_index(G: Graph, f: Sequence, x: int) -> Fraction:
    return Fraction(index(G, f, x) + index(G, f, x, reverse=True), 2)


def symmetric_indices(G: Graph, f: Sequence) -> list[Fraction]:
    return [symmetric_index(G, f, x) for x in range(G.n)]
