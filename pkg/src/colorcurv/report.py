"""Per-graph reports and their text/JSON rendering."""

from __future__ import annotations

from decimal import ROUND_HALF_EVEN, ROUND_DOWN, Decimal
from fractions import Fraction

from .coloring import (
    chromatic_number,
    chromatic_polynomial,
    enumerate_colorings,
    index_expectation,
    index_moments,
    index_variance,
    richness,
    sqrt_decimal,
)
from .curvature import curvatures
from .generators import inductive_dimension
from .graph import Graph, euler_characteristic, f_vector, local_clique_vector


def fmt_q(q) -> str:
    """``"p/q"``, or ``"p"`` for integers."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_decimal(q: Fraction, places: int, mode: str = "half-even") -> str:
    quantum = Decimal(1).scaleb(-places)
    rounding = ROUND_HALF_EVEN if mode == "half-even" else ROUND_DOWN
    d = Decimal(q.numerator) / Decimal(q.denominator)
    return str(d.quantize(quantum, rounding=rounding))


def fmt_sigma(variance: Fraction, mode: str = "half-even", places: int = 3) -> str:
    rounding = ROUND_HALF_EVEN if mode == "half-even" else ROUND_DOWN
    return str(sqrt_decimal(variance).quantize(Decimal(1).scaleb(-places), rounding=rounding))


def build_report(G: Graph, colors: int | None = None, moments: int | None = None, sigma_rounding: str = "half-even") -> dict:
    K = curvatures(G)
    dim = inductive_dimension(G)
    chrom = chromatic_number(G)
    rep = {
        "n": G.n,
        "edges": len(G.edges),
        "f_vector": list(f_vector(G)),
        "euler_characteristic": euler_characteristic(G),
        "chromatic_number": chrom,
        "inductive_dimension": fmt_q(dim),
        "inductive_dimension_decimal": fmt_decimal(dim, 5),
        "vertices": [
            {"vertex": x, "degree": G.degree(x), "V": list(local_clique_vector(G, x)), "K": fmt_q(K[x])}
            for x in range(G.n)
        ],
    }
    if colors is None:
        return rep
    space = enumerate_colorings(G, colors)
    space.require_nonempty()
    E = index_expectation(G, colors)
    var = index_variance(G, colors)
    rep["colors"] = colors
    rep["colorings"] = len(space)
    rep["chromatic_polynomial"] = list(chromatic_polynomial(G).coeffs)
    rep["richness"] = fmt_q(richness(G)) if G.n else None
    rep["expectation_equals_curvature"] = E == K
    for x, row in enumerate(rep["vertices"]):
        row["E_index"] = fmt_q(E[x])
        row["sigma"] = fmt_sigma(var[x], sigma_rounding)
    if moments:
        m = index_moments(G, colors, moments)
        rep["moments"] = [fmt_q(a) for a in m.total]
        for x, row in enumerate(rep["vertices"]):
            row["moments"] = [fmt_q(a) for a in m.per_vertex[x]]
    return rep


def render_text(rep: dict) -> str:
    lines = [
        f"graph: n={rep['n']} edges={rep['edges']}",
        f"f-vector: ({', '.join(map(str, rep['f_vector']))})",
        f"euler characteristic: {rep['euler_characteristic']}",
        f"chromatic number: {rep['chromatic_number']}",
        f"inductive dimension: {rep['inductive_dimension']} ({rep['inductive_dimension_decimal']})",
    ]
    if "colors" in rep:
        poly = " ".join(str(a) for a in rep["chromatic_polynomial"])
        lines += [
            f"colors: {rep['colors']}",
            f"C({rep['colors']}) = {rep['colorings']}",
            f"chromatic polynomial (ascending): {poly}",
            f"richness {rep['richness']}",
            f"E[i_f]=K: {'OK' if rep['expectation_equals_curvature'] else 'FAIL'}",
        ]
    cols = ["vertex", "deg", "V(x)", "K(x)"]
    if "colors" in rep:
        cols += ["E[i_f]", "sigma"]
    has_moments = "moments" in rep
    if has_moments:
        cols += [f"a_{k + 1}(x)" for k in range(len(rep["moments"]))]
    rows = []
    for v in rep["vertices"]:
        r = [str(v["vertex"]), str(v["degree"]), "(" + ",".join(map(str, v["V"])) + ")", v["K"]]
        if "colors" in rep:
            r += [v["E_index"], v["sigma"]]
        if has_moments:
            r += v["moments"]
        rows.append(r)
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(cols)]
    lines.append("  ".join(h.ljust(w) for h, w in zip(cols, widths)).rstrip())
    for r in rows:
        lines.append("  ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip())
    if has_moments:
        lines.append("a_k: " + ", ".join(rep["moments"]))
    return "\n".join(lines)
