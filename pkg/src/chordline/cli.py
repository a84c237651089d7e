"""``chordline`` command line: recognize, canon, transform, iso, gen.

Exit codes: 0 yes/success, 1 no/not in class, 2 usage or parse error,
3 internal invariant violation. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generators
from .canon import canon
from .chordal import is_chordal
from .errors import (
    EmptyGraphError,
    NoCandidatesError,
    NotChordalLineError,
    NotHatImageError,
    NotLineGraphError,
    ParseError,
    StructuralViolation,
    TooLargeError,
)
from .graph import Graph, LabeledGraph, connected_components, parse_graph, relabel, serialize_graph
from .isocheck import are_isomorphic
from .linegraph import find_induced_claw, is_chordal_line, line_graph, root_graph
from .reductions import hat, hat_split

OK, NO, USAGE, INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _read(path: str) -> LabeledGraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return parse_graph(Path(path).read_text())


def _fmt(vs) -> str:
    return " ".join(str(v) for v in vs)


def cmd_recognize(args) -> int:
    g = _read(args.input)
    if args.cls == "chordal":
        report = is_chordal(g)
        if report:
            print("chordal: yes")
            print(f"elimination-order: {_fmt(report.order)}")
            return OK
        print("chordal: no")
        print(f"chordless-cycle: {_fmt(report.cycle)}")
        return NO
    if args.cls == "line":
        roots = []
        for comp in connected_components(g):
            try:
                roots.append(root_graph(g.subgraph(comp)))
            except NotLineGraphError as exc:
                print("line: no")
                claw = exc.claw or find_induced_claw(g)
                if claw:
                    print(f"claw: {_fmt(claw)}")
                return NO
        print("line: yes")
        for res in roots:
            for (a, b), x in sorted(res.correspondence.items(), key=lambda kv: kv[1]):
                print(f"root-edge {x} {a} {b}")
        return OK
    if args.cls == "chordal-line":
        report = is_chordal_line(g)
        if report:
            print("chordal-line: yes")
            return OK
        print(f"chordal-line: no ({report.reason})")
        if report.witness:
            label = "chordless-cycle" if report.reason == "not-chordal" else "claw"
            print(f"{label}: {_fmt(report.witness)}")
        return NO
    try:
        split = hat_split(g)
    except NotHatImageError as exc:
        print(f"hat: no ({exc})")
        return NO
    print("hat: yes")
    print(f"core: {_fmt(sorted(split.core))}")
    for x, (a, b) in sorted(split.pendant.items()):
        print(f"pendant {x} {a} {b}")
    return OK


def cmd_canon(args) -> int:
    g = _read(args.input)
    try:
        form = canon(g, paranoid=args.paranoid)
    except NotChordalLineError as exc:
        print(f"not a chordal line graph: {exc}", file=sys.stderr)
        return NO
    except (StructuralViolation, NoCandidatesError, AssertionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return INTERNAL
    sys.stdout.write(serialize_graph(form.graph))
    if args.witness:
        for v in sorted(form.witness):
            print(f"c {v} {form.witness[v]}")
    return OK


def _emit(g: LabeledGraph, provenance: list[str]) -> None:
    for line in provenance:
        print(f"# {line}")
    sys.stdout.write(serialize_graph(g))


def cmd_transform(args) -> int:
    g = _read(args.input)
    op = args.op
    if op == "hat":
        img = hat(g)
        out = LabeledGraph(len(img.graph), img.graph.edges)
        _emit(out, [f"{x} <- edge {a} {b}" for x, (a, b) in sorted(img.pendant.items())])
        return OK
    if op == "unhat":
        try:
            split = hat_split(g)
        except NotHatImageError as exc:
            print(f"not a hat image: {exc}", file=sys.stderr)
            return NO
        out, ids = relabel(Graph(split.core, split.pendant.values()))
        _emit(out, [f"{ids[v]} <- core {v}" for v in sorted(split.core)])
        return OK
    if op == "linegraph":
        out, ids = relabel(line_graph(g))
        _emit(out, [f"{ids[e]} <- edge {e[0]} {e[1]}" for e in sorted(ids)])
        return OK
    edges = []
    notes = []
    offset = 0
    for comp in connected_components(g):
        try:
            res = root_graph(g.subgraph(comp))
        except NotLineGraphError as exc:
            print(f"not a line graph: {exc}", file=sys.stderr)
            return NO
        for (a, b), x in sorted(res.correspondence.items()):
            edges.append((a + offset, b + offset))
            notes.append(f"edge {a + offset} {b + offset} <- {x}")
        offset += res.root.order
    _emit(LabeledGraph(offset, edges), notes)
    return OK


def cmd_iso(args) -> int:
    a, b = _read(args.a), _read(args.b)
    f = are_isomorphic(a, b)
    if f is None:
        print("isomorphic: no")
        return NO
    print("isomorphic: yes")
    if args.mapping:
        for v in sorted(f):
            print(f"m {v} {f[v]}")
    return OK


def _generate(args, seed: int) -> tuple[str, LabeledGraph]:
    kind = args.kind
    if kind in ("triangle-cactus", "chordal-line"):
        fn = generators.gen_triangle_cactus if kind == "triangle-cactus" else generators.gen_chordal_line
        return f"{kind}_b{args.blocks:02d}_s{seed:04d}", fn(args.blocks, args.triangles, seed)
    if kind == "chordal":
        return f"{kind}_n{args.n:02d}_s{seed:04d}", generators.gen_chordal(args.n, args.fill, seed)
    return f"{kind}_n{args.n:02d}_s{seed:04d}", generators.gen_random(args.n, args.p, seed)


def cmd_gen(args) -> int:
    if args.kind == "roots-exhaustive":
        items = [
            (f"roots_m{g.size:02d}_{i:04d}", g)
            for i, g in enumerate(generators.enumerate_small_roots(args.max_edges))
            if g.size >= args.min_edges
        ]
    else:
        items = [_generate(args, args.seed + k) for k in range(args.count)]
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, g in items:
            (out / f"{name}.txt").write_text(serialize_graph(g))
        print(f"wrote {len(items)} graphs to {out}", file=sys.stderr)
        return OK
    for name, g in items:
        if len(items) > 1:
            print(f"# {name}")
        sys.stdout.write(serialize_graph(g))
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chordline", description="Chordal line graph recognition, reductions and canonical forms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("recognize", help="decide class membership")
    r.add_argument("input", help="edge-list file, or - for stdin")
    r.add_argument("--class", dest="cls", required=True, choices=["chordal", "line", "chordal-line", "hat"])
    r.set_defaults(func=cmd_recognize)

    c = sub.add_parser("canon", help="canonical form of a chordal line graph")
    c.add_argument("input")
    c.add_argument("--witness", action="store_true", help="append 'c v i' lines mapping input to output")
    c.add_argument("--paranoid", action="store_true", help="re-verify the witness edge by edge")
    c.set_defaults(func=cmd_canon)

    t = sub.add_parser("transform", help="apply a reduction")
    t.add_argument("input")
    t.add_argument("--op", required=True, choices=["hat", "unhat", "linegraph", "rootgraph"])
    t.set_defaults(func=cmd_transform)

    i = sub.add_parser("iso", help="exact isomorphism test")
    i.add_argument("a")
    i.add_argument("b")
    i.add_argument("--mapping", action="store_true", help="print a verified bijection as 'm v w' lines")
    i.set_defaults(func=cmd_iso)

    g = sub.add_parser("gen", help="emit generated graphs")
    g.add_argument("--kind", required=True, choices=["triangle-cactus", "chordal-line", "chordal", "random", "roots-exhaustive"])
    g.add_argument("--blocks", type=int, default=10)
    g.add_argument("--triangles", type=float, default=0.5, help="fraction of triangle blocks")
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--fill", type=float, default=0.5)
    g.add_argument("--p", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--max-edges", type=int, default=4)
    g.add_argument("--min-edges", type=int, default=1)
    g.add_argument("--out", help="directory to write one file per graph")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, EmptyGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, TooLargeError) as exc:
        print(f"bad parameters: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
