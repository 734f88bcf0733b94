"""The `wheelix` command line tool.

Exit codes: 0 success; 1 domain negative (NOT-WHEELER, NOT-EQUIVALENT, word
rejected); 2 usage or format error (including unsupported nondeterminism);
3 resource limit.  Data goes to stdout or output files, diagnostics to
stderr, and identical inputs always produce byte-identical outputs.
"""

import argparse
import random
import sys

from . import generators
from .automaton import (
    gen_worst_case,
    parse_automaton,
    serialize_automaton,
    trie_from_strings,
)
from .convert import min_wdfa_from_acyclic_dfa
from .determinize import determinize
from .errors import (
    CyclicError,
    DegreeTooHigh,
    FormatError,
    InvalidAutomaton,
    NotDeterministic,
    NotInputConsistent,
    NotWheeler,
    OutputLimitExceeded,
    SortFailed,
    UnknownSymbol,
)
from .index import (
    MEMBERSHIP,
    SUBSTRING_CLOSURE,
    SUFFIX_CLOSURE,
    build_index,
    parse_index,
    query,
    serialize_index,
)
from .minimize import hopcroft_minimize, language_equivalent, wheeler_minimize
from .order import parse_order, serialize_order
from .sorting import sort_offline, sort_online
from .twosat import sort_2nfa

_MODE_NAMES = {
    "membership": MEMBERSHIP,
    "substr": SUBSTRING_CLOSURE,
    "suffix": SUFFIX_CLOSURE,
}


def _read_automaton(path):
    with open(path, encoding="utf-8") as fh:
        return parse_automaton(fh.read())


def _read_order(path):
    with open(path, encoding="utf-8") as fh:
        return parse_order(fh.read())


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _word_symbols(raw):
    """CLI words are character sequences, or comma-separated multi-char
    tokens when a comma is present."""
    if raw == "":
        return ()
    if "," in raw:
        return tuple(t for t in raw.split(",") if t)
    return tuple(raw)


def _emit_pair(automaton, order, out_base):
    _write(out_base + ".wnfa", serialize_automaton(automaton))
    _write(out_base + ".order", serialize_order(order))
    print(f"{out_base}.wnfa")
    print(f"{out_base}.order")


def _cmd_check(args):
    a = _read_automaton(args.input)
    try:
        order = sort_2nfa(a)
    except DegreeTooHigh as exc:
        print(f"UNSUPPORTED d={exc.degree}")
        return 2
    except NotInputConsistent:
        order = None
    if order is None:
        print("NOT-WHEELER")
        return 1
    print("WHEELER")
    sys.stdout.write(serialize_order(order))
    return 0


def _cmd_sort(args):
    a = _read_automaton(args.input)
    sorter = sort_online if args.online else sort_offline
    try:
        order = sorter(a)
    except SortFailed as exc:
        print(f"NOT-WHEELER({exc.kind})", file=sys.stderr)
        return 1
    sys.stdout.write(serialize_order(order))
    return 0


def _cmd_determinize(args):
    a = _read_automaton(args.input)
    order = _read_order(args.order)
    out, out_order = determinize(a, order)
    _emit_pair(out, out_order, args.output)
    return 0


def _cmd_minimize(args):
    a = _read_automaton(args.input)
    order = _read_order(args.order)
    out, out_order = wheeler_minimize(a, order)
    _emit_pair(out, out_order, args.output)
    return 0


def _cmd_hopcroft(args):
    a = _read_automaton(args.input)
    out = hopcroft_minimize(a)
    _write(args.output, serialize_automaton(out))
    print(args.output)
    return 0


def _cmd_dfa2wdfa(args):
    a = _read_automaton(args.input)
    out, out_order = min_wdfa_from_acyclic_dfa(a, max_states=args.max_states)
    _emit_pair(out, out_order, args.output)
    return 0


def _cmd_equiv(args):
    a = _read_automaton(args.left)
    b = _read_automaton(args.right)
    if language_equivalent(a, b):
        print("EQUIVALENT")
        return 0
    print("NOT-EQUIVALENT")
    return 1


def _cmd_index_build(args):
    a = _read_automaton(args.input)
    order = _read_order(args.order)
    ix = build_index(a, order)
    _write(args.output, serialize_index(ix))
    print(args.output)
    return 0


def _cmd_index_query(args):
    with open(args.index, encoding="utf-8") as fh:
        ix = parse_index(fh.read())
    ok = query(ix, _word_symbols(args.word), _MODE_NAMES[args.mode])
    print("YES" if ok else "NO")
    return 0 if ok else 1


def _cmd_gen(args):
    if args.kind == "worst-case":
        a = gen_worst_case(int(args.arg))
    elif args.kind == "trie":
        with open(args.arg, encoding="utf-8") as fh:
            words = [_word_symbols(line.strip()) for line in fh if line.strip()]
        a = trie_from_strings(words)
    elif args.kind == "random-dfa":
        rng = random.Random(args.seed)
        a = generators.random_dfa(rng, args.states, args.sigma)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.kind)
    _write(args.output, serialize_automaton(a))
    print(args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wheelix",
        description="Prefix-sortable finite automata toolbox",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="decide Wheeler-ness of a 2-NFA")
    p.add_argument("input")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("sort", help="prefix-sort a DFA")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--online", action="store_true")
    group.add_argument("--offline", action="store_true")
    p.add_argument("input")
    p.set_defaults(func=_cmd_sort)

    p = sub.add_parser("determinize", help="sorted WNFA to equivalent WDFA")
    p.add_argument("input")
    p.add_argument("order")
    p.add_argument("-o", "--output", default="out")
    p.set_defaults(func=_cmd_determinize)

    p = sub.add_parser("minimize", help="sorted WDFA to minimum WDFA")
    p.add_argument("input")
    p.add_argument("order")
    p.add_argument("-o", "--output", default="out")
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("hopcroft", help="classical DFA minimization")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="out.wnfa")
    p.set_defaults(func=_cmd_hopcroft)

    p = sub.add_parser("dfa2wdfa", help="acyclic DFA to minimum WDFA")
    p.add_argument("--max-states", type=int, default=10**6)
    p.add_argument("input")
    p.add_argument("-o", "--output", default="out")
    p.set_defaults(func=_cmd_dfa2wdfa)

    p = sub.add_parser("equiv", help="language equivalence of two DFAs")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("index", help="build or query a path index")
    isub = p.add_subparsers(dest="index_verb", required=True)
    pb = isub.add_parser("build")
    pb.add_argument("input")
    pb.add_argument("order")
    pb.add_argument("-o", "--output", default="out.idx")
    pb.set_defaults(func=_cmd_index_build)
    pq = isub.add_parser("query")
    pq.add_argument("index")
    pq.add_argument("--mode", choices=sorted(_MODE_NAMES), required=True)
    pq.add_argument("word")
    pq.set_defaults(func=_cmd_index_query)

    p = sub.add_parser("gen", help="generate corpora automata")
    gsub = p.add_subparsers(dest="kind", required=True)
    pw = gsub.add_parser("worst-case")
    pw.add_argument("arg", metavar="m")
    pw.add_argument("-o", "--output", default="out.wnfa")
    pw.set_defaults(func=_cmd_gen, kind="worst-case")
    pt = gsub.add_parser("trie")
    pt.add_argument("arg", metavar="wordfile")
    pt.add_argument("-o", "--output", default="out.wnfa")
    pt.set_defaults(func=_cmd_gen, kind="trie")
    pr = gsub.add_parser("random-dfa")
    pr.add_argument("--states", type=int, required=True)
    pr.add_argument("--sigma", type=int, required=True)
    pr.add_argument("--seed", type=int, required=True)
    pr.add_argument("-o", "--output", default="out.wnfa")
    pr.set_defaults(func=_cmd_gen, kind="random-dfa")

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (FormatError, InvalidAutomaton, UnknownSymbol, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotDeterministic, DegreeTooHigh, CyclicError, NotWheeler) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SortFailed as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except OutputLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entry():  # console_scripts hook
    raise SystemExit(main())
