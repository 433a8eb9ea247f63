"""``colorcurv`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from . import _kernels
from .coloring import EmptySpaceError, enumerate_colorings, richness
from .curvature import LocalInjectivityError, curvature, indices, is_locally_injective
from .generators import GraphSpec, erdos_renyi, gen_named
from .graph import Graph, GraphInputError, graph_from_json
from .report import build_report, fmt_q, render_text
from .verify import first_failure, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read_graph(path: str) -> Graph:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    return graph_from_json(data)


def _emit(text: str, out: str | None = None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_json(rows) -> str:
    if not rows:
        return "[]"
    return "[\n" + ",\n".join("  " + json.dumps(r, separators=(",", ":")) for r in rows) + "\n]"


def _graph_json(G: Graph) -> str:
    edges = ", ".join(json.dumps(list(e)) for e in G.edges)
    return f'{{"n": {G.n}, "edges": [{edges}]}}'


# -- subcommands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    G = gen_named(GraphSpec(args.name, tuple(args.params)))
    _emit(_graph_json(G), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    G = _read_graph(args.file)
    rep = build_report(G, args.colors, args.moments, args.sigma_rounding)
    if args.json:
        _emit(json.dumps(rep, indent=2))
    else:
        _emit(render_text(rep))
    if "expectation_equals_curvature" in rep and not rep["expectation_equals_curvature"]:
        return EXIT_FAIL
    return EXIT_OK


def cmd_colorings(args) -> int:
    G = _read_graph(args.file)
    space = enumerate_colorings(G, args.colors)
    rows = [list(r) for r in space]
    idx = space.index_matrix.tolist() if args.with_indices else None
    if args.format == "json":
        if idx is None:
            _emit(_rows_json(rows))
        else:
            _emit('{\n"colorings": ' + _rows_json(rows) + ',\n"indices": ' + _rows_json(idx) + "\n}")
    else:
        lines = [",".join(str(v) for v in range(G.n))]
        lines += [",".join(map(str, r)) for r in (idx if idx is not None else rows)]
        _emit("\n".join(lines))
    print(f"{len(rows)} colorings", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _read_graph(args.file)
    curv = curvature
    if args.corrupt_curvature:
        def curv(G, x):
            return curvature(G, x) + (Fraction(1, 7) if x == 0 else 0)
    checks = run_checks(G, args.colors, curvature_fn=curv)
    for ch in checks:
        status = "PASS" if ch.ok else "FAIL"
        print(f"{status} {ch.name}" + (f": {ch.detail}" if ch.detail else ""))
    bad = first_failure(checks)
    if bad is not None:
        print(f"verification failed at {bad.name}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_dot(args) -> int:
    G = _read_graph(args.file)
    if args.coloring is not None:
        try:
            f = [int(t) for t in args.coloring.replace("{", "").replace("}", "").split(",")]
        except ValueError:
            raise UsageError(f"--coloring expects comma-separated integers, got {args.coloring!r}") from None
        if len(f) != G.n or not is_locally_injective(G, f) or not all(1 <= t <= args.colors for t in f):
            raise UsageError(f"--coloring is not a proper {args.colors}-coloring of this graph")
    else:
        space = enumerate_colorings(G, args.colors)
        r = args.row
        if not 0 <= r < len(space):
            raise UsageError(f"coloring row {r} out of range: the space has {len(space)} colorings")
        f = list(space.colorings[r].tolist())
    ind = indices(G, f)
    lines = ["graph G {"]
    for x in range(G.n):
        lines.append(f'  {x} [label="{f[x]}/{ind[x]}"];')
    for u, v in G.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_stats(args) -> int:
    hist: Counter = Counter()
    for s in range(args.samples):
        G = erdos_renyi(args.n, args.p_num, args.p_den, args.seed + s)
        hist[richness(G)] += 1
    items = sorted(hist.items())
    if args.json:
        doc = {
            "n": args.n, "p": f"{args.p_num}/{args.p_den}", "samples": args.samples, "seed": args.seed,
            "histogram": [{"richness": fmt_q(q), "count": c} for q, c in items],
        }
        _emit(json.dumps(doc, indent=2))
    else:
        lines = [f"richness over {args.samples} G({args.n}, {args.p_num}/{args.p_den}) graphs, seeds {args.seed}..{args.seed + args.samples - 1}"]
        lines += [f"{fmt_q(q):>10}  {c}" for q, c in items]
        _emit("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="colorcurv", description="Curvature, Poincare-Hopf indices and coloring spaces of finite simple graphs.")
    p.add_argument("--backend-info", action="store_true", help="print the kernel backend and exit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    g = sub.add_parser("gen", help="write a named graph as JSON")
    g.add_argument("name")
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="f-vector, chi, curvature and coloring statistics")
    a.add_argument("file")
    a.add_argument("--colors", "-c", type=int)
    a.add_argument("--moments", type=int, metavar="K")
    a.add_argument("--json", action="store_true")
    a.add_argument("--sigma-rounding", choices=("half-even", "truncate"), default="half-even")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("colorings", help="list all proper colorings")
    c.add_argument("file")
    c.add_argument("-c", "--colors", type=int, required=True)
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--with-indices", action="store_true")
    c.set_defaults(func=cmd_colorings)

    v = sub.add_parser("verify", help="check every identity; exit 1 on failure")
    v.add_argument("file")
    v.add_argument("--colors", "-c", type=int)
    v.add_argument("--corrupt-curvature", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dot", help="DOT graph labeled color/index for one coloring")
    d.add_argument("file")
    d.add_argument("-c", "--colors", type=int, required=True)
    pick = d.add_mutually_exclusive_group(required=True)
    pick.add_argument("--coloring-row", "--index", "-r", dest="row", type=int)
    pick.add_argument("--coloring", help="explicit coloring, e.g. 1,2,3,4")
    d.set_defaults(func=cmd_dot)

    s = sub.add_parser("stats", help="richness histogram over seeded G(n, p)")
    s.add_argument("n", type=int)
    s.add_argument("p_num", type=int)
    s.add_argument("p_den", type=int)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.backend_info:
            print(_kernels.BACKEND)
            return EXIT_OK
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        return args.func(args)
    except UsageError as exc:
        print(f"colorcurv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphInputError, EmptySpaceError, LocalInjectivityError, ValueError) as exc:
        print(f"colorcurv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
