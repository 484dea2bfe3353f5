"""Command-line front end: ``dtc <subcommand> [flags] INPUT``.

Exit status: 0 success, 1 domain error, 2 malformed input or usage.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

import networkx as nx

from . import formats
from .errors import DomainError, DtcError, MalformedInput
from .forest_complex import (
    conflict_graph, directed_tree_complex, f_triangle, f_vector, h_triangle, h_vector,
    independency_complex, is_directed_forest, is_pure, label_str, relabel_edges,
    remove_interiors, skeleton, tree_complex_skeleton,
)
from .graph_core import (
    complete_r_sources, complete_sources, double_directed, is_essentially_tree,
    parse_digraph, parse_graph, strongly_independent_number,
)
from .homology import betti, euler_reduced, nonzero
from .shelling import (
    ShellingViolation, find_shelling, generating_facets_from_order, interval_partition_ok,
    is_vertex_decomposable, shelling_h_triangle, verify_shelling,
)
from .skeleton_shelling import cycle_skeleton_shelling, r_source_skeleton_shelling
from .source_shelling import (
    complete_source_shelling, sphere_census, union_cover_check,
)
from .tree_shelling import (
    dag_homotopy, enumerate_basic_decompositions, generating_facets_tree,
    h_triangle_via_recursion, recursive_shelling, tree_homotopy,
)

STRATEGIES = ("source", "skeleton", "tree", "brute")


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []

    def text(self, *lines: str) -> None:
        if not self.as_json:
            self.lines.extend(lines)

    def record(self, **rec) -> None:
        if self.as_json:
            self.lines.append(json.dumps(rec, sort_keys=True))

    def flush(self) -> None:
        if self.lines:
            sys.stdout.write("\n".join(self.lines) + "\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MalformedInput("unreadable", str(exc)) from exc


def load_digraph(args):
    text = _read(args.input)
    if args.double:
        g = parse_graph(text)
        return double_directed(g), g
    return parse_digraph(text), None


def load_graph(args):
    return parse_graph(_read(args.input))


def _face(c, f) -> list[str]:
    return [label_str(x) for x in c.sorted_face(f)]


# -------------------------------------------------------------- commands

def cmd_facets(args, out):
    d, _ = load_digraph(args)
    c = directed_tree_complex(d)
    out.text(*formats.format_facet_list(c))
    for f in c.sorted_facets:
        out.record(facet=_face(c, f))


def cmd_fvec(args, out):
    d, _ = load_digraph(args)
    v = f_vector(directed_tree_complex(d))
    out.text(formats.format_vector(v))
    out.record(f=list(v))


def cmd_hvec(args, out):
    d, _ = load_digraph(args)
    v = h_vector(directed_tree_complex(d))
    out.text(formats.format_vector(v))
    out.record(h=list(v))


def cmd_ftri(args, out):
    d, _ = load_digraph(args)
    tri = f_triangle(directed_tree_complex(d))
    out.text(*formats.format_triangle(tri))
    for (i, j), v in tri.items():
        out.record(i=i, j=j, value=v)


def cmd_htri(args, out):
    d, _ = load_digraph(args)
    tri = h_triangle(directed_tree_complex(d))
    out.text(*formats.format_triangle(tri))
    for (i, j), v in tri.items():
        out.record(i=i, j=j, value=v)


def build_shelling(args, d, g):
    """(complex, order, header lines) for the chosen strategy."""
    strategy = args.strategy
    if strategy == "auto":
        if complete_sources(d):
            strategy = "source"
        elif is_essentially_tree(d) and d.edges:
            strategy = "tree"
        else:
            strategy = "brute"
    if strategy == "source":
        c = args.source or (complete_sources(d) or [None])[0]
        if c is None:
            raise DomainError("not-source", "digraph has no complete source")
        ss = complete_source_shelling(d, c)
        layers = " ".join(str(len(layer)) for layer in ss.layers)
        return directed_tree_complex(d), ss.order, ["strategy source", f"source {c}", f"layers {layers}"]
    if strategy == "skeleton":
        if g is None:
            raise MalformedInput("usage", "the skeleton strategy needs --double and an undirected input")
        if args.r_source:
            a = args.r_source.split(",")
        else:
            found = complete_r_sources(g)
            if not found:
                raise DomainError("not-r-source", "graph has no complete r-source")
            a = list(found[0])
        order = r_source_skeleton_shelling(g, a)
        m = len(g.vertices) - len(a) - 1
        return tree_complex_skeleton(d, m), order, ["strategy skeleton", f"r-source {','.join(a)}", f"dim {m}"]
    if strategy == "tree":
        return directed_tree_complex(d), recursive_shelling(d), ["strategy tree"]
    c = directed_tree_complex(d)
    order = find_shelling(c, cap=args.cap)
    if order is None:
        raise DomainError("not-shellable", "exhaustive search found no shelling")
    return c, order, ["strategy brute"]


def cmd_shell(args, out):
    d, g = load_digraph(args)
    c, order, header = build_shelling(args, d, g)
    out.text(*formats.format_order(c, order, header))
    for f, r in zip(order.facets, order.restrictions):
        out.record(facet=_face(c, f), restriction=_face(c, r), type=len(r))


def cmd_verify(args, out):
    d, _ = load_digraph(args)
    facets, header = formats.parse_order(_read(args.order))
    c = tree_complex_skeleton(d, int(header["dim"])) if "dim" in header else directed_tree_complex(d)
    try:
        s = verify_shelling(c, facets)
    except ShellingViolation as exc:
        out.text(f"invalid\t{exc.i}\t{exc.j}")
        out.record(valid=False, i=exc.i, j=exc.j)
        out.flush()
        return 1
    out.text("valid", "\t".join(["types"] + [str(t) for t in s.types]))
    out.record(valid=True, types=list(s.types))
    return 0


def cmd_generators(args, out):
    d, g = load_digraph(args)
    c, order, _ = build_shelling(args, d, g)
    gens = sorted(generating_facets_from_order(order), key=c.key)
    out.text(*sorted(c.format_face(f) for f in gens))
    for f in gens:
        out.record(facet=_face(c, f), dim=len(f) - 1)


def cmd_spheres(args, out):
    d, _ = load_digraph(args)
    c = args.source or (complete_sources(d) or [None])[0]
    if c is None:
        raise DomainError("not-source", "digraph has no complete source")
    n = len(d.vertices)
    census = sphere_census(d, c)
    out.text("k\tcount\tfolds\tbase_dim")
    for k, cnt in census.items():
        out.text(f"{k}\t{cnt}\t{n - k - 1}\t{k - 1}")
        out.record(k=k, count=cnt, folds=n - k - 1, base_dim=k - 1)
    if args.cover:
        cx = directed_tree_complex(d)
        for e in union_cover_check(d):
            out.text(f"{cx.format_face(e.facet)}\t{cx.format_face(e.generator)}\t{'covered' if e.covered else 'MISSING'}")
            out.record(facet=_face(cx, e.facet), generator=_face(cx, e.generator), covered=e.covered)


def cmd_skeleton(args, out):
    g = load_graph(args)
    r, witness = strongly_independent_number(g)
    m = len(g.vertices) - r - 1
    c = tree_complex_skeleton(double_directed(g), m)
    out.text(f"# r {r}", f"# witness {','.join(witness)}", f"# dim {m}", *formats.format_facet_list(c))
    out.record(r=r, witness=list(witness), dim=m, pure=is_pure(c), facets=len(c.facets))


def cmd_cycle(args, out):
    try:
        n = int(args.input)
    except ValueError as exc:
        raise MalformedInput("usage", "cycle takes an integer n >= 3") from exc
    res = cycle_skeleton_shelling(n)
    verdict = "shellable" if res.shellable else "not-shellable"
    out.text(f"n\t{n}", f"verdict\t{verdict}", f"method\t{res.method}")
    out.record(n=n, verdict=verdict, method=res.method)
    if res.shellable:
        out.text(*formats.format_order(res.complex, res.order))
    else:
        out.text("dim\trank")
        for k, v in sorted(res.certificate.items()):
            out.text(f"{k}\t{v}")
            out.record(dim=k, rank=v)


def cmd_decompose(args, out):
    t = load_graph(args)
    decomps, mu = enumerate_basic_decompositions(t)
    n = len(t.vertices)
    for dec in decomps:
        pieces = " ".join("(" + " ".join(sorted(p, key=t.index.__getitem__)) + ")" for p in dec.pieces)
        arcs = " ".join(label_str(a) for a in sorted(dec.generating_facet, key=lambda e: (t.index[e[0]], t.index[e[1]])))
        out.text(f"{pieces} | {arcs}")
        out.record(pieces=[sorted(p, key=t.index.__getitem__) for p in dec.pieces],
                   generating_facet=[label_str(a) for a in sorted(dec.generating_facet)])
    out.text("m\tmu\tdim")
    for m, cnt in mu.items():
        out.text(f"{m}\t{cnt}\t{(n + m - 3) // 2}")
        out.record(m=m, mu=cnt, dim=(n + m - 3) // 2)


def _profile_text(profile: dict[int, int], tag) -> str:
    if not profile:
        return "contractible"
    return " v ".join(f"S^{dim} ({tag(dim)}={cnt})" for dim, cnt in sorted(profile.items()))


def cmd_homotopy(args, out):
    d, g = load_digraph(args)
    c = directed_tree_complex(d)
    b = nonzero(betti(c))
    if g is not None and g.is_tree():
        profile = tree_homotopy(g)
        n = len(g.vertices)
        text = _profile_text(profile, lambda dim: f"mu_{2 * dim + 3 - n}")
        method = "basic-decomposition"
    elif d.is_acyclic():
        profile = dag_homotopy(d)
        text = _profile_text(profile, lambda dim: "count")
        method = "dag"
    else:
        profile = b
        text = _profile_text(profile, lambda dim: "betti")
        method = "betti"
    out.text(text)
    out.record(profile={str(k): v for k, v in profile.items()}, method=method, betti_agrees=profile == b)
    if profile != b:
        print(f"betti mismatch: {b}", file=sys.stderr)
        out.flush()
        return 1
    return 0


def cmd_betti(args, out):
    d, _ = load_digraph(args)
    b = betti(directed_tree_complex(d), args.prime)
    out.text(*formats.format_betti(b, args.prime))
    for k, v in b.items():
        out.record(dim=k, rank=v, p=args.prime)


def run_report(d, g, seed: int = 0) -> list[tuple[str, bool]]:
    """Every applicable check on one input digraph."""
    rng = random.Random(seed)
    checks: list[tuple[str, bool]] = []
    c = directed_tree_complex(d)
    checks.append(("facets-are-maximal-forests", all(
        is_directed_forest(d, f) and not any(is_directed_forest(d, f | {e}) for e in d.edges - f)
        for f in c.facets)))
    b2, b3 = betti(c, 2), betti(c, 3)
    checks.append(("betti-p2-equals-p3", b2 == b3))
    checks.append(("euler-identity", euler_reduced(c) == sum((-1) ** k * v for k, v in b2.items())))
    tri = h_triangle(c)
    if is_pure(c):
        h = h_vector(c)
        checks.append(("h-vector-sum-equals-facets", sum(h) == len(c.facets)))
    orders = []
    srcs = complete_sources(d)
    if srcs:
        ss = complete_source_shelling(d, srcs[0])
        orders.append(("source", ss.order))
        checks.append(("source-restriction-formula", all(
            r == frozenset(e for e in f if e[0] != srcs[0])
            for f, r in zip(ss.order.facets, ss.order.restrictions))))
        layer_of = {f: i for i, layer in enumerate(ss.layers) for f in layer}
        checks.append(("source-type-equals-layer", all(
            len(r) == layer_of[f] for f, r in zip(ss.order.facets, ss.order.restrictions))))
        fuzz_ok = True
        for _ in range(20):
            refined = []
            for layer in ss.layers:
                layer = list(layer)
                rng.shuffle(layer)
                refined += layer
            try:
                s = verify_shelling(c, refined)
            except ShellingViolation:
                fuzz_ok = False
                break
            fuzz_ok &= interval_partition_ok(c, s)
        checks.append(("source-refinements-shell", fuzz_ok))
    if len(srcs) >= 2:
        checks.append(("union-of-spheres-cover", all(e.covered for e in union_cover_check(d))))
    if is_essentially_tree(d) and d.edges:
        s = recursive_shelling(d)
        orders.append(("tree", s))
        checks.append(("tree-htriangle-recursion", h_triangle_via_recursion(d) == tri))
        checks.append(("tree-generators-match-order", generating_facets_tree(d) == generating_facets_from_order(s)))
        ind = relabel_edges(independency_complex(conflict_graph(d)))
        checks.append(("conflict-graph-equality", ind.facets == c.facets))
        cg = conflict_graph(d)
        nxg = nx.Graph(list(cg.sorted_edges))
        nxg.add_nodes_from(cg.vertices)
        checks.append(("conflict-chordless-cycles-length-3",
                       all(len(cyc) == 3 for cyc in nx.chordless_cycles(nxg))))
        if len(c.vertices) <= 24:
            checks.append(("vertex-decomposable", is_vertex_decomposable(c)))
    if d.is_acyclic():
        checks.append(("dag-formula-matches-betti", dag_homotopy(d) == nonzero(b2)))
    if g is not None and g.is_tree():
        checks.append(("basic-decomposition-wedge", tree_homotopy(g) == nonzero(b2)))
    if not orders and len(c.facets) <= 30:
        s = find_shelling(c)
        if s is not None:
            orders.append(("brute", s))
    for name, s in orders:
        checks.append((f"{name}-interval-partition", interval_partition_ok(c, s)))
        checks.append((f"{name}-htriangle-matches", shelling_h_triangle(s) == tri))
        gens = generating_facets_from_order(s)
        checks.append((f"{name}-generator-removal-contractible", nonzero(betti(remove_interiors(c, gens))) == {}))
        by_size: dict[int, int] = {}
        for f in gens:
            by_size[len(f) - 1] = by_size.get(len(f) - 1, 0) + 1
        checks.append((f"{name}-generators-match-betti", by_size == nonzero(b2)))
    return checks


def cmd_report(args, out):
    d, g = load_digraph(args)
    checks = run_report(d, g, args.seed)
    for name, ok in checks:
        out.text(f"{'PASS' if ok else 'FAIL'}\t{name}")
        out.record(check=name, passed=ok)
    return 0 if all(ok for _, ok in checks) else 1


COMMANDS = {
    "facets": cmd_facets, "fvec": cmd_fvec, "hvec": cmd_hvec, "ftri": cmd_ftri, "htri": cmd_htri,
    "shell": cmd_shell, "verify": cmd_verify, "generators": cmd_generators, "spheres": cmd_spheres,
    "skeleton": cmd_skeleton, "cycle": cmd_cycle, "decompose": cmd_decompose,
    "homotopy": cmd_homotopy, "betti": cmd_betti, "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="graph file (.dg directed, .ug undirected); an integer for 'cycle'")
    common.add_argument("--double", action="store_true", help="read an undirected graph and double every edge")
    common.add_argument("--json", action="store_true", help="one JSON record per line")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="dtc", description="complexes of directed trees")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name in ("shell", "generators"):
            sp.add_argument("--strategy", choices=STRATEGIES + ("auto",),
                            default="source" if name == "shell" else "auto")
            sp.add_argument("--source", help="complete source for the source strategy")
            sp.add_argument("--r-source", help="comma-separated complete r-source for the skeleton strategy")
            sp.add_argument("--cap", type=int, default=30, help="facet cap for brute-force search")
        if name == "spheres":
            sp.add_argument("--source")
            sp.add_argument("--cover", action="store_true", help="also print the union-of-spheres cover")
        if name == "verify":
            sp.add_argument("--order", required=True, help="order file written by 'shell'")
        if name == "betti":
            sp.add_argument("--prime", type=int, default=2)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json)
    try:
        code = COMMANDS[args.command](args, out) or 0
    except MalformedInput as exc:
        print(f"dtc: {exc}", file=sys.stderr)
        return 2
    except DtcError as exc:
        print(f"dtc: {exc}", file=sys.stderr)
        return 1
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
