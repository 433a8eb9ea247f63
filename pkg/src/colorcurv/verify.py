"""Batch verification of the exact identities on one graph."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coloring import chromatic_number, chromatic_polynomial, enumerate_colorings
from .curvature import curvature, index
from .graph import Graph, euler_characteristic, handshake_check, local_clique_vector

# per-coloring sphere recomputation is skipped beyond this many (coloring, vertex) pairs
ROUTE_CHECK_BUDGET = 20000


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def run_checks(G: Graph, c: int | None = None, curvature_fn=curvature) -> list[Check]:
    """Run every identity; ``curvature_fn`` is injectable so tests can corrupt it.

    ``c`` defaults to the chromatic number. Raises ``EmptySpaceError`` when
    ``c`` is below it.
    """
    chi = euler_characteristic(G)
    K = [curvature_fn(G, x) for x in range(G.n)]
    checks = [Check("handshake", handshake_check(G))]

    total = sum(K, Fraction(0))
    checks.append(Check("gauss-bonnet", total == chi, f"sum K = {total}, chi = {chi}"))

    if c is None:
        c = chromatic_number(G)
    space = enumerate_colorings(G, c)
    M = len(space)
    poly = chromatic_polynomial(G)
    checks.append(Check("chromatic-polynomial", poly(c) == M, f"C({c}) = {poly(c)}, enumerated {M}"))
    space.require_nonempty()

    table = space.index_matrix
    bad = [r for r in range(M) if int(table[r].sum()) != chi]
    checks.append(Check(
        "poincare-hopf",
        not bad,
        f"{M} colorings checked" if not bad else f"coloring row {bad[0]} sums to {int(table[bad[0]].sum())}, chi = {chi}",
    ))

    if M * G.n <= ROUTE_CHECK_BUDGET:
        rows = range(M)
    else:
        step = max(1, M * G.n // ROUTE_CHECK_BUDGET)
        rows = range(0, M, step)
    mismatch = None
    for r in rows:
        f = space.colorings[r].tolist()
        for x in range(G.n):
            if index(G, f, x) != int(table[r, x]):
                mismatch = (r, x)
                break
        if mismatch:
            break
    checks.append(Check(
        "index-routes",
        mismatch is None,
        "" if mismatch is None else f"coloring row {mismatch[0]}, vertex {mismatch[1]}",
    ))

    col_sums = table.sum(axis=0)
    first = next((x for x in range(G.n) if Fraction(int(col_sums[x]), M) != K[x]), None)
    checks.append(Check(
        "index-expectation",
        first is None,
        f"E[i_f] = K at all {G.n} vertices with c = {c}" if first is None
        else f"vertex {first}: E[i_f] = {Fraction(int(col_sums[first]), M)}, K = {K[first]}",
    ))

    counts = space.top_counts
    first = None
    for x in range(G.n):
        for k, Vk in enumerate(local_clique_vector(G, x)):
            got = Fraction(int(counts[:, x, k + 1].sum()), M)
            if got != Fraction(Vk, k + 2):
                first = (x, k, got, Fraction(Vk, k + 2))
                break
        if first:
            break
    checks.append(Check(
        "sublevel-expectation",
        first is None,
        "" if first is None else f"vertex {first[0]}, k = {first[1]}: {first[2]} != {first[3]}",
    ))
    return checks


def first_failure(checks: list[Check]) -> Check | None:
    return next((ch for ch in checks if not ch.ok), None)
