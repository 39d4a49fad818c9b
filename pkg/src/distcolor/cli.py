"""Command line interface. Every subcommand prints sorted-key JSON.

Exit codes: 0 success, 1 input error, 2 anomaly (a gap in a reduction or an
unavoidability failure), 3 no coloring exists where one was requested.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import constructions as C
from .configs import TheoremId, check_hypotheses, detect_all
from .conflict import ColoringKind, coloring_to_dict, conflict_graph
from .corpus import CorpusItem, exhaustive, random_corpus
from .discharge import Anomaly, frac_str, run_rules, verify_unavoidability
from .graph import (
    Graph,
    InputError,
    diameter,
    exact_two_neighborhood,
    girth,
    graph_to_dict,
    is_connected,
    load_graph_text,
    mad,
    two_distance_neighborhood,
)
from .plane import EmbeddingError, PlaneGraph, embed, plane_from_dict, plane_to_dict
from .reducer import GapReport, color_constructive
from .solver import Unsat, chromatic_number, color_with_lists, sampled_choosability

EXIT_OK, EXIT_INPUT, EXIT_ANOMALY, EXIT_UNSAT = 0, 1, 2, 3
DEFAULT_SEED = 20240


def _ints(s: str) -> list[int]:
    return [int(x) for x in s.replace("x", ",").split(",") if x]


def generate(spec: str, seed: int = DEFAULT_SEED) -> Graph | PlaneGraph:
    """Build a named construction from ``name:params``."""
    name, _, params = spec.partition(":")
    p = _ints(params) if params and name != "circulant" else []
    try:
        if name == "cycle":
            return C.cycle(p[0])
        if name == "path":
            return C.path(p[0])
        if name == "complete":
            return C.complete(p[0])
        if name == "theta":
            return C.theta_plane(p[0])
        if name == "ig":
            return C.incidence_graph_pg(p[0])
        if name == "petersen":
            return C.petersen()
        if name == "grid":
            return C.grid(p[0], p[1] if len(p) > 1 else p[0])
        if name == "cube":
            return C.cube()
        if name == "dodecahedron":
            return C.dodecahedron()
        if name == "octahedron":
            return C.octahedron()
        if name == "paw":
            return C.paw_fig1()[0]
        if name == "circulant":
            n, _, jumps = params.partition(":")
            return C.circulant(int(n), _ints(jumps))
        if name == "random":
            n = p[0]
            s = p[1] if len(p) > 1 else seed
            return next(random_corpus(1, seed=s, max_n=max(n, 9))).pg
        if name == "witness":
            g = C.search_diameter2_witness(seed=p[0] if p else seed)
            if g is None:
                raise InputError("no diameter-2 witness found within the search budget")
            return g
    except (IndexError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad generator parameters in {spec!r}") from exc
    raise InputError(f"unknown generator {name!r}")


def _load(args) -> Graph | PlaneGraph:
    if args.gen:
        return generate(args.gen, args.seed)
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        d = load_graph_text(text)
        if "rotation" in d:
            return plane_from_dict(d)
        from .graph import graph_from_dict

        return graph_from_dict(d)
    raise InputError("give a graph with --in or --gen")


def _graph(obj) -> Graph:
    return obj.graph if isinstance(obj, PlaneGraph) else obj


def _plane(obj) -> PlaneGraph:
    return obj if isinstance(obj, PlaneGraph) else embed(obj)


def _inf(x):
    return "inf" if x == float("inf") else x


def _kind(args) -> ColoringKind:
    if not args.kind:
        raise InputError("--kind is required")
    return ColoringKind.parse(args.kind)


def _theorem(args) -> TheoremId:
    if not args.theorem:
        raise InputError("--theorem is required")
    return TheoremId.parse(args.theorem)


def _lists(args, n: int, default_k: int | None) -> list[list[int]]:
    if args.lists:
        d = json.loads(Path(args.lists).read_text())
        lists = d["lists"] if isinstance(d, dict) else d
        if len(lists) != n:
            raise InputError("lists must cover every vertex")
        return [list(map(int, x)) for x in lists]
    k = args.k if args.k is not None else default_k
    if k is None:
        raise InputError("give --k or --lists")
    return [list(range(k)) for _ in range(n)]


# ---------------------------------------------------------------------------


def cmd_metrics(args):
    g = _graph(_load(args))
    selected = [x for x in ("girth", "mad", "degrees", "neighborhoods") if getattr(args, x)]
    fields = selected or ["n", "m", "degrees", "girth", "mad", "connected", "diameter", "neighborhoods"]
    out = {}
    for f in fields:
        if f == "n":
            out["n"] = g.n
        elif f == "m":
            out["m"] = g.edge_count
        elif f == "degrees":
            out["degrees"] = [g.degree(v) for v in range(g.n)]
            out["max_degree"] = g.max_degree()
        elif f == "girth":
            out["girth"] = _inf(girth(g))
        elif f == "mad":
            out["mad"] = frac_str(mad(g)) if g.n else None
        elif f == "connected":
            out["connected"] = is_connected(g)
        elif f == "diameter":
            out["diameter"] = _inf(diameter(g)) if g.n else None
        elif f == "neighborhoods":
            out["two_distance"] = [sorted(two_distance_neighborhood(g, v)) for v in range(g.n)]
            out["exact_two"] = [sorted(exact_two_neighborhood(g, v)) for v in range(g.n)]
    return EXIT_OK, out


def cmd_faces(args):
    pg = _plane(_load(args))
    return EXIT_OK, {"faces": [{"id": f.id, "size": f.size, "walk": list(f.walk)} for f in pg.faces]}


def cmd_conflict(args):
    g = _graph(_load(args))
    cg = conflict_graph(g, _kind(args))
    return EXIT_OK, {"kind": args.kind, "n": cg.n, "edges": [list(e) for e in cg.edges()]}


def cmd_chromatic(args):
    g = _graph(_load(args))
    return EXIT_OK, {"chi": chromatic_number(conflict_graph(g, _kind(args)))}


def cmd_color(args):
    obj = _load(args)
    if args.theorem:
        t = TheoremId.parse(args.theorem)
        pg = _plane(obj)
        lists = _lists(args, pg.n, t.list_size)
        trace: list = []
        try:
            c = color_constructive(pg, t, lists, trace)
        except GapReport as gap:
            return EXIT_ANOMALY, gap.to_dict()
        out = coloring_to_dict(c, pg.n)
        out["reductions"] = [r.lemma for r in trace]
        return EXIT_OK, out
    g = _graph(obj)
    kind = _kind(args)
    lists = _lists(args, g.n, None)
    res = color_with_lists(conflict_graph(g, kind), lists)
    if isinstance(res, Unsat):
        return EXIT_UNSAT, res.to_dict()
    return EXIT_OK, coloring_to_dict(res, g.n)


def cmd_detect(args):
    pg = _plane(_load(args))
    t = _theorem(args)
    ws = detect_all(pg, t)
    return EXIT_OK, {"witnesses": [w.to_dict(pg) for w in ws]}


def cmd_discharge(args):
    pg = _plane(_load(args))
    return EXIT_OK, run_rules(pg, _theorem(args)).to_dict()


def cmd_verify(args):
    pg = _plane(_load(args))
    out = verify_unavoidability(pg, _theorem(args))
    return (EXIT_ANOMALY if isinstance(out, Anomaly) else EXIT_OK), out.to_dict(pg)


def cmd_gen(args):
    spec = args.gen or args.name
    if not spec:
        raise InputError("give a generator name")
    obj = generate(spec, args.seed)
    if isinstance(obj, PlaneGraph):
        return EXIT_OK, plane_to_dict(obj)
    try:
        return EXIT_OK, plane_to_dict(embed(obj))
    except EmbeddingError:
        return EXIT_OK, graph_to_dict(obj)


def _corpus_items(args):
    if args.input:
        for path in sorted(Path(args.input).glob("*.json")):
            d = json.loads(path.read_text())
            yield CorpusItem(path.name, plane_from_dict(d))
        return
    yield from exhaustive(args.exhaustive)
    yield from random_corpus(args.random, seed=args.seed)


def _verify_item(item: CorpusItem, theorems):
    rows = []
    for t in theorems:
        try:
            check_hypotheses(item.pg, t)
        except InputError:
            rows.append((t, None))
            continue
        rows.append((t, verify_unavoidability(item.pg, t)))
    return rows


def cmd_corpus(args):
    theorems = [TheoremId.parse(args.theorem)] if args.theorem else list(TheoremId)
    items = list(_corpus_items(args))
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(lambda it: _verify_item(it, theorems), items))
    stats = {t.value: {"checked": 0, "skipped": 0, "anomalies": 0, "first_lemma": Counter()} for t in theorems}
    anomalies = []
    for item, rows in zip(items, results):
        for t, out in rows:
            s = stats[t.value]
            if out is None:
                s["skipped"] += 1
                continue
            s["checked"] += 1
            if isinstance(out, Anomaly):
                s["anomalies"] += 1
                anomalies.append({"graph": item.name, "theorem": t.value, "detail": out.to_dict(item.pg)})
            else:
                s["first_lemma"][out.witnesses[0].lemma] += 1
    for s in stats.values():
        s["first_lemma"] = dict(sorted(s["first_lemma"].items()))
    total = sum(s["anomalies"] for s in stats.values())
    out = {"graphs": len(items), "theorems": stats, "anomalies": anomalies}
    return (EXIT_ANOMALY if total else EXIT_OK), out


def cmd_probe(args):
    g = _graph(_load(args))
    kind = _kind(args)
    if args.k is None:
        raise InputError("--k is required")
    pool = args.pool if args.pool is not None else 2 * args.k
    rep = sampled_choosability(g, kind, args.k, args.trials, args.seed, pool)
    return EXIT_OK, rep.to_dict()


COMMANDS = {
    "metrics": cmd_metrics,
    "faces": cmd_faces,
    "conflict": cmd_conflict,
    "chromatic": cmd_chromatic,
    "color": cmd_color,
    "detect": cmd_detect,
    "discharge": cmd_discharge,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "corpus": cmd_corpus,
    "probe": cmd_probe,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distcolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--in", dest="input", help="graph file (JSON or edge list), '-' for stdin")
        p.add_argument("--out", help="write JSON here instead of stdout")
        p.add_argument("--gen", help="built-in construction, e.g. ig:3, theta:4, grid:3x3")
        p.add_argument("--theorem", choices=[t.value for t in TheoremId])
        p.add_argument("--kind", choices=[k.value for k in ColoringKind])
        p.add_argument("--k", type=int)
        p.add_argument("--lists", help="JSON file with {\"lists\": [[...], ...]}")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--pool", type=int)
        p.add_argument("--jobs", type=int, default=1)
        if name == "metrics":
            for flag in ("girth", "mad", "degrees", "neighborhoods"):
                p.add_argument(f"--{flag}", action="store_true")
        if name == "gen":
            p.add_argument("name", nargs="?")
        if name == "corpus":
            p.add_argument("--exhaustive", type=int, default=7, help="largest order of the exhaustive part")
            p.add_argument("--random", type=int, default=200, help="number of random instances")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = COMMANDS[args.command](args)
    except (InputError, EmbeddingError, json.JSONDecodeError, OSError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(out, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
