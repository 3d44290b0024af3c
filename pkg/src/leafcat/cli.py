"""Command-line interface.

Exit codes: 0 on success / true, 1 on false / rejection / failed claims,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catseq, graph, verify, words
from .leafwords import (
    Rejection,
    delta_leaf_word,
    format_leaf_word,
    leaf_equivalent,
    realize_caterpillar,
)
from .subtrees import (
    DEFAULT_MAX_N,
    NEG_INF,
    LeafFunction,
    leaf_function_bruteforce,
)

FAMILIES = ("wheel", "star", "chain", "fk", "caterpillar")


def _build_family(family: str, param: str) -> graph.Graph:
    if family == "caterpillar":
        return graph.caterpillar_graph(catseq.parse_sequence(param))
    n = int(param)
    if family == "wheel":
        return graph.wheel(n)
    if family == "star":
        return graph.star(n)
    if family == "chain":
        return graph.chain(n)
    if family == "fk":
        return graph.fk_tree(n)
    raise ValueError(f"unknown family {family!r}")


def _input_graph(args) -> graph.Graph:
    if args.family:
        if args.param is None:
            raise ValueError("--family requires --param")
        return _build_family(args.family, args.param)
    if args.graph_file:
        return graph.read_edge_list(Path(args.graph_file).read_text())
    raise ValueError("no graph input given")


def _input_leaf_function(args) -> LeafFunction:
    if args.caterpillar:
        return catseq.leaf_function_caterpillar(catseq.parse_sequence(args.caterpillar))
    return leaf_function_bruteforce(_input_graph(args), max_n=args.max_n)


def _print_leaf_function(lf: LeafFunction, as_json: bool) -> None:
    if as_json:
        print(lf.to_json())
    else:
        print(", ".join(f"{i} -> {v!r}" for i, v in enumerate(lf.values)))


def _word_arg(args) -> str:
    if args.empty:
        if args.word:
            raise ValueError("give a word or --empty, not both")
        return ""
    if args.word is None:
        raise ValueError("missing word (use --empty for the empty word)")
    words.check_binary(args.word)
    return args.word


def _add_graph_inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph_file", nargs="?", help="edge-list file ('n m' header)")
    p.add_argument("--caterpillar", help="caterpillar sequence, e.g. 3,0,2,4,0,1")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--param", help="family parameter (int, or sequence for caterpillar)")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                   help="size bound for brute-force enumeration")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="leafcat")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a family graph as an edge list")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--dot", action="store_true", help="emit DOT instead")
    p.add_argument("--highlight", help="comma-separated vertices to color blue")

    p = sub.add_parser("leaf-function", help="leaf function of a graph")
    _add_graph_inputs(p)

    p = sub.add_parser("leaf-word", help="leaf word of a graph")
    _add_graph_inputs(p)

    for name in ("rc", "pnf"):
        p = sub.add_parser(name)
        p.add_argument("word", nargs="?")
        p.add_argument("--empty", action="store_true", help="use the empty word")

    p = sub.add_parser("word-of", help="binary word of a caterpillar sequence")
    p.add_argument("sequence")

    p = sub.add_parser("check-pn", help="prefix normality (or k-prefix normality)")
    p.add_argument("word", nargs="?")
    p.add_argument("--empty", action="store_true")
    p.add_argument("--k", type=int, default=0)

    p = sub.add_parser("equiv", help="same maximal-ones profile?")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("realize", help="caterpillar realizing a leaf-function vector")
    p.add_argument("values", help="comma-separated values, -inf allowed")

    p = sub.add_parser("poset", help="cover relations of small caterpillar sequences")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", default="all", choices=("all",) + verify.SUITES + tuple(verify.SUITE_ALIASES))
    p.add_argument("--max-n", type=int, default=None)

    return ap


def _run(args) -> int:
    if args.command == "generate":
        g = _build_family(args.family, args.param)
        if args.dot:
            hi = [int(x) for x in args.highlight.split(",")] if args.highlight else ()
            sys.stdout.write(graph.to_dot(g, hi))
        else:
            sys.stdout.write(graph.write_edge_list(g))
        return 0

    if args.command == "leaf-function":
        _print_leaf_function(_input_leaf_function(args), args.json)
        return 0

    if args.command == "leaf-word":
        lw = delta_leaf_word(_input_leaf_function(args))
        if args.json:
            print(json.dumps({"leaf_word": format_leaf_word(lw)}))
        else:
            print(format_leaf_word(lw))
        return 0

    if args.command == "rc":
        s = words.rc(_word_arg(args))
        print(json.dumps({"sequence": catseq.format_sequence(s)}) if args.json
              else catseq.format_sequence(s))
        return 0

    if args.command == "word-of":
        w = catseq.word_of(catseq.parse_sequence(args.sequence))
        print(json.dumps({"word": w}) if args.json else w)
        return 0

    if args.command == "pnf":
        v = words.pnf(_word_arg(args))
        print(json.dumps({"word": v}) if args.json else v)
        return 0

    if args.command == "check-pn":
        w = _word_arg(args)
        if args.k == 0:
            ok = words.is_prefix_normal(w)
            if args.json:
                wit = words.pn_violation(w)
                print(json.dumps({"prefix_normal": ok,
                                  "witness": list(wit) if wit else None}))
            elif ok:
                print("prefix normal")
            else:
                p, f = words.pn_violation(w)
                print(f"not prefix normal: prefix {p} has fewer 1s than factor {f}")
        else:
            ok = words.is_k_prefix_normal(w, args.k)
            if args.json:
                print(json.dumps({"k": args.k, "k_prefix_normal": ok}))
            else:
                print(f"{'' if ok else 'not '}{args.k}-prefix normal")
        return 0 if ok else 1

    if args.command == "equiv":
        words.check_binary(args.word1)
        words.check_binary(args.word2)
        ok = words.equivalent(args.word1, args.word2)
        same_lf = leaf_equivalent(args.word1, args.word2)
        if args.json:
            print(json.dumps({"equivalent": ok, "leaf_equivalent": same_lf}))
        else:
            print("equivalent" if ok else "not equivalent")
        return 0 if ok else 1

    if args.command == "realize":
        parts = [p.strip() for p in args.values.split(",")]
        vals = tuple(NEG_INF if p == "-inf" else int(p) for p in parts)
        try:
            lf = LeafFunction(len(vals) - 1, vals)
        except ValueError as exc:
            print(f"rejected: {exc}")
            return 1
        result = realize_caterpillar(lf)
        if isinstance(result, Rejection):
            if args.json:
                print(json.dumps({"realizable": False, "reason": result.reason,
                                  "witness": list(result.witness) if result.witness else None}))
            else:
                print(f"rejected: {result.message()}")
            return 1
        out = catseq.format_sequence(result)
        print(json.dumps({"realizable": True, "sequence": out}) if args.json else out)
        return 0

    if args.command == "poset":
        if args.dot:
            sys.stdout.write(catseq.hasse_dot(args.max_size))
        else:
            for lo, hi in sorted(catseq.hasse_covers(args.max_size)):
                print(f"{catseq.format_sequence(lo)} < {catseq.format_sequence(hi)}")
        return 0

    if args.command == "verify":
        reports = verify.run_suite(args.suite, args.max_n)
        if args.json:
            print(json.dumps([r.to_dict() for r in reports]))
        else:
            for r in reports:
                print(r.line())
        return 0 if all(r.passed for r in reports) else 1

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _run(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
