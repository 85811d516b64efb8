"""Command-line front end.

Graph arguments accept a JSON file path, ``-`` for stdin, inline JSON, or
family shorthand such as ``crown:3``; append ``@v`` to mark vertex ``v``
(``cycle:6@1``). Exit codes: 0 success, 2 budget exceeded, 3 bad input,
4 failed self-verification.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .construct import classify_recomposition
from .corpus import run_examples
from .errors import BudgetExceeded, InputError, VerificationError
from .graph import FamilySpec, Graph, MarkedGraph, generate_family, graph_from_dict
from .order import (
    Orientation,
    dimension,
    induced_poset,
    is_prn_irreducible,
    poset_from_orientation,
    prn,
    source_orientation,
    transitive_orientation,
)
from .split import SplitTree, is_parity, minimal_split_decomposition, recompose
from .words import format_word, parse_word, represents, representation_number

EXIT_OK, EXIT_BUDGET, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3, 4

log = logging.getLogger("wordrep")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"environment variable {name} must be an integer") from None
    if value < 1:
        raise InputError(f"environment variable {name} must be positive")
    return value


def _read_text(spec: str) -> str:
    if spec == "-":
        return sys.stdin.read()
    return Path(spec).read_text(encoding="utf-8")


def _load_json(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_graph_input(spec: str) -> Graph | MarkedGraph:
    """Parse a path, ``-``, inline JSON, or ``family:size[@mark]``."""
    text = spec.strip()
    if text.startswith("{"):
        return graph_from_dict(_load_json(text, "inline graph"))
    if text == "-" or Path(text).is_file():
        return graph_from_dict(_load_json(_read_text(text), text))
    base, _, mark = text.partition("@")
    if ":" not in base:
        raise InputError(f"cannot read graph {spec!r}: not a file, JSON, or family shorthand")
    g = generate_family(FamilySpec.parse(base))
    return MarkedGraph(g, mark) if mark else g


def _plain(g: Graph | MarkedGraph) -> Graph:
    return g.graph if isinstance(g, MarkedGraph) else g


def _marked(g: Graph | MarkedGraph, what: str) -> MarkedGraph:
    if not isinstance(g, MarkedGraph):
        raise InputError(f"{what} needs a marked vertex (JSON field 'marked' or '@v' suffix)")
    return g


def _emit(args, payload: dict, text: str, dot: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    elif args.format == "dot":
        if dot is None:
            raise InputError(f"command {args.command!r} has no DOT output")
        sys.stdout.write(dot)
    else:
        print(text)


def cmd_check_word(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    w = parse_word(args.word)
    ok = represents(w, g)
    _emit(args, {"word": list(w), "represents": ok}, f"represents: {str(ok).lower()}")
    return EXIT_OK


def cmd_repnum(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    k, w = representation_number(g, args.k_max, args.max_vertices, jobs=args.jobs)
    _emit(args, {"representation_number": k, "witness": list(w)},
          f"representation number: {k}\nwitness: {format_word(w)}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    tree = minimal_split_decomposition(g)
    lines = [f"{len(tree.components)} component(s)"]
    for c in tree.components:
        lines.append(f"  {c.tag}: {' '.join(c.graph.vertices)}"
                     + (f"  [markers {' '.join(c.markers)}]" if c.markers else ""))
    dot = ["graph splits {"]
    for i, c in enumerate(tree.components):
        dot.append(f"  subgraph cluster_{i} {{ label=\"{c.tag}\";")
        dot += [f'    "{a}" -- "{b}";' for a, b in c.graph.edges]
        dot.append("  }")
    dot += [f'  "{x}" -- "{y}" [style=dashed];' for x, y in tree.links]
    dot.append("}")
    _emit(args, tree.to_dict(), "\n".join(lines), "\n".join(dot) + "\n")
    return EXIT_OK


def cmd_recompose(args) -> int:
    if args.tree:
        tree = SplitTree.from_dict(_load_json(_read_text(args.tree), args.tree))
        g = tree.recompose()
    else:
        if len(args.graphs) != 2:
            raise InputError("recompose takes two marked graphs or --tree")
        g = recompose(_marked(parse_graph_input(args.graphs[0]), "recompose"),
                      _marked(parse_graph_input(args.graphs[1]), "recompose"))
    _emit(args, g.to_dict(), g.to_json(), g.to_dot())
    return EXIT_OK


def cmd_classify(args) -> int:
    gm = _marked(parse_graph_input(args.first), "classify")
    hm = _marked(parse_graph_input(args.second), "classify")
    cert = classify_recomposition(gm, hm, k_max=args.k_max)
    lines = [cert.summary()]
    if cert.word is not None:
        lines.append(f"witness word ({cert.word_kind}): {format_word(cert.word)}")
    if cert.orientation is not None:
        lines.append("witness orientation: " + " ".join(f"{a}->{b}" for a, b in cert.orientation.sorted_arcs()))
    lines += [f"note: {n}" for n in cert.notes]
    dot = cert.orientation.to_dot("recomposition", cert.graph.vertices) if cert.orientation else cert.graph.to_dot()
    _emit(args, cert.to_dict(), "\n".join(lines), dot)
    return EXIT_OK


def cmd_prn(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    k, w, realizer = prn(g, args.dim_k_max)
    _emit(args, {"prn": k, "witness": list(w), "realizer": realizer.to_list()},
          f"prn: {k}\nwitness: " + " | ".join(" ".join(o) for o in realizer.orders))
    return EXIT_OK


def _orientation_file(path: str) -> Orientation:
    data = _load_json(_read_text(path), path)
    if not isinstance(data, list) or not all(isinstance(a, list) and len(a) == 2 for a in data):
        raise InputError(f"{path}: orientation must be a list of [from, to] pairs")
    return Orientation(tuple(a) for a in data)


def cmd_orient(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    t = source_orientation(g, args.source) if args.source else transitive_orientation(g)
    if t is None:
        what = f"no transitive orientation has {args.source} as a source" if args.source else "not comparability"
        _emit(args, {"comparability": args.source is not None and transitive_orientation(g) is not None,
                     "orientation": None}, what, g.to_dot())
        return EXIT_OK
    arcs = [list(a) for a in t.sorted_arcs()]
    _emit(args, {"comparability": True, "orientation": arcs},
          " ".join(f"{a}->{b}" for a, b in t.sorted_arcs()), t.to_dot("T", g.vertices))
    return EXIT_OK


def cmd_dim(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    p = poset_from_orientation(g, _orientation_file(args.orientation)) if args.orientation else induced_poset(g)
    k, realizer = dimension(p, args.dim_k_max)
    _emit(args, {"dimension": k, "realizer": realizer.to_list()},
          f"dimension: {k}\n" + "\n".join("  " + " < ".join(o) for o in realizer.orders))
    return EXIT_OK


def cmd_irreducible(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    r = is_prn_irreducible(g)
    if r.irreducible:
        text = f"{r.prn}-prn-irreducible"
    else:
        text = f"not irreducible (prn {r.prn}; deleting {r.witness} keeps it)"
    _emit(args, {"prn": r.prn, "irreducible": r.irreducible, "witness": r.witness}, text)
    return EXIT_OK


def cmd_parity(args) -> int:
    g = _plain(parse_graph_input(args.graph))
    ok = is_parity(g)
    _emit(args, {"parity": ok}, f"parity graph: {str(ok).lower()}")
    return EXIT_OK


def cmd_paper_examples(args) -> int:
    results = run_examples()
    failed = [r for r in results if not r[1]]
    text = "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" + ("" if ok else f"  ({detail})")
                     for name, ok, detail in results)
    text += f"\n{len(results) - len(failed)}/{len(results)} examples reproduced"
    payload = {"results": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]}
    _emit(args, payload, text)
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    k_default = os.environ.get("WORDREP_K_MAX", "3")
    v_default = _env_int("WORDREP_MAX_VERTICES", 8)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--k-max", type=int, default=None,
                        help=f"search depth for representation numbers (env WORDREP_K_MAX, default {k_default}); "
                             "caps prn and dimension only when given")
    common.add_argument("--max-vertices", type=int, default=v_default,
                        help="vertex cap for the exhaustive word search (env WORDREP_MAX_VERTICES)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for the word search")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="wordrep", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    p = add("check-word", cmd_check_word, "does a word represent a graph")
    p.add_argument("word", help="whitespace-separated letters")
    p.add_argument("graph")
    add("repnum", cmd_repnum, "representation number by exhaustive search").add_argument("graph")
    add("decompose", cmd_decompose, "minimal split decomposition").add_argument("graph")
    p = add("recompose", cmd_recompose, "split recomposition of two marked graphs")
    p.add_argument("graphs", nargs="*")
    p.add_argument("--tree", help="recompose a split tree JSON instead")
    p = add("classify", cmd_classify, "comparability of a recomposition, with certificate")
    p.add_argument("first")
    p.add_argument("second")
    add("prn", cmd_prn, "permutation-representation number").add_argument("graph")
    p = add("orient", cmd_orient, "transitive orientation")
    p.add_argument("graph")
    p.add_argument("--source", help="require this vertex to be a source")
    p = add("dim", cmd_dim, "dimension of the induced poset")
    p.add_argument("graph")
    p.add_argument("--orientation", help="JSON list of arcs; default is any transitive orientation")
    add("irreducible", cmd_irreducible, "prn-irreducibility").add_argument("graph")
    add("parity", cmd_parity, "parity graph recognition").add_argument("graph")
    add("paper-examples", cmd_paper_examples, "reproduce the built-in worked examples")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.dim_k_max = args.k_max
        if args.k_max is None:
            args.k_max = _env_int("WORDREP_K_MAX", 3)
        if args.k_max < 1 or args.max_vertices < 1 or args.jobs < 1:
            raise InputError("budgets must be positive")
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
