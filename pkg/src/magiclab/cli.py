"""Command-line interface.

Subcommands: generate, label, verify, nullset, matching, graphical.

Graphs are read from --in FILE or stdin, as either a graph6 line or the
edge-list format (auto-detected: edge lists start with a digit, graph6
characters never do).  Exit codes: 0 for success, 1 for a semantic
failure (the tool ran, the mathematics said no), 2 for usage errors and
malformed or invalid input.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import construct, degseq, formats, magic, matching
from .errors import MagiclabError, MalformedInputError
from .graph import Graph


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc}") from exc


def _read_graph(path: str | None) -> Graph:
    text = _read_text(path)
    try:
        for raw in text.splitlines():
            content = raw.split("#", 1)[0].strip()
            if not content:
                continue
            if content[0].isdigit():
                return formats.read_edge_list(text)
            return formats.decode_graph6(content)
        raise MalformedInputError("empty graph input")
    except MalformedInputError:
        raise
    except MagiclabError as exc:
        # Loops, duplicates, out-of-range endpoints found while ingesting
        # input count as invalid input, not as a semantic result.
        raise MalformedInputError(str(exc)) from exc


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.random:
        g = construct.random_regular(args.n, args.r, args.seed)
    else:
        g = construct.build_regular(args.n, args.r)
    print(formats.encode_graph6(g))
    return 0


def _cmd_label(args: argparse.Namespace) -> int:
    g = _read_graph(args.infile)
    if args.h == 3:
        labeling = magic.label_five_regular(g)
    else:
        labeling = magic.label_odd_regular_via_factor(g, args.h)
    record = formats.make_labeling_record(g, labeling)
    sys.stdout.write(formats.write_labeling_record(record))
    return 0 if record.verdict else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    record = formats.read_labeling_record(_read_text(args.labels))
    if args.h is None or args.h == record.h:
        labeling = record.labeling
    else:
        try:
            labeling = magic.Labeling(h=args.h, labels=record.labeling.labels)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    sums = magic.vertex_sums(record.graph, labeling)
    verdict = magic.is_zero_sum(record.graph, labeling)
    for v, s in enumerate(sums):
        print(f"sum {v} {s}")
    print(f"verdict {'zero-sum' if verdict else 'not-zero-sum'}")
    return 0 if verdict else 1


def _cmd_nullset(args: argparse.Namespace) -> int:
    g = _read_graph(args.infile)
    budget = args.budget
    if budget is None:
        env = os.environ.get("MAGICLAB_BUDGET")
        budget = int(env) if env else magic.DEFAULT_BUDGET
    report = magic.null_set_oracle(g, args.hmin, args.hmax, budget=budget)
    names = {True: "member", False: "non-member", None: "undecided"}
    for h in range(args.hmin, args.hmax + 1):
        print(f"h {h} {names[report.member[h]]}")
    return 0


def _cmd_matching(args: argparse.Namespace) -> int:
    g = _read_graph(args.infile)
    report = matching.max_matching(g)
    for i in sorted(report.matching.edge_indices):
        u, v = g.edges[i]
        print(f"edge {u} {v}")
    print(f"size {len(report.matching)}")
    print(f"perfect {'true' if report.is_perfect else 'false'}")
    return 0


def _cmd_graphical(args: argparse.Namespace) -> int:
    tokens = args.sequence.replace(",", " ").split()
    try:
        values = [int(tok) for tok in tokens]
        d = degseq.DegreeSequence(values)
    except ValueError as exc:
        print(f"error: bad degree sequence: {exc}", file=sys.stderr)
        return 2
    if not degseq.is_graphical(d):
        print("graphical false")
        return 0
    print("graphical true")
    g = degseq.realize(d)
    if g.n <= formats.GRAPH6_MAX_N:
        print(f"realization {formats.encode_graph6(g)}")
    return 0


def _add_input_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--in",
        dest="infile",
        default=None,
        metavar="FILE",
        help="graph file (graph6 or edge list); stdin when omitted",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magiclab",
        description="Zero-sum magic labelings of regular graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit an r-regular graph as graph6")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--r", type=int, required=True, help="degree")
    p.add_argument(
        "--random",
        action="store_true",
        help="sample via the pairing model instead of the inductive builder",
    )
    p.add_argument("--seed", type=int, default=0, help="pairing-model seed")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("label", help="construct a zero-sum labeling via a 1-factor")
    p.add_argument("--h", type=int, default=3, help="modulus (default 3)")
    _add_input_flag(p)
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("verify", help="recheck a labeling record")
    p.add_argument(
        "--labels",
        default=None,
        metavar="FILE",
        help="labeling record; stdin when omitted",
    )
    p.add_argument(
        "--h",
        type=int,
        default=None,
        help="verify under this modulus instead of the record's",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("nullset", help="exhaustive membership over a modulus range")
    p.add_argument("--hmin", type=int, required=True)
    p.add_argument("--hmax", type=int, required=True)
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help="search-node budget per modulus "
        "(default: MAGICLAB_BUDGET or 10^8)",
    )
    _add_input_flag(p)
    p.set_defaults(func=_cmd_nullset)

    p = sub.add_parser("matching", help="maximum matching of the input graph")
    _add_input_flag(p)
    p.set_defaults(func=_cmd_matching)

    p = sub.add_parser("graphical", help="test a degree sequence, realize if possible")
    p.add_argument(
        "--sequence",
        required=True,
        help="comma- or space-separated degrees, e.g. '5,5,5,5,5,5'",
    )
    p.set_defaults(func=_cmd_graphical)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MagiclabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:  # bad numeric arguments (range, budget, env)
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
