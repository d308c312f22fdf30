"""Command line front end.

Subcommands:

* ``gen-fixture`` writes the walkthrough sequence used throughout the
  tests and demos.
* ``infer`` runs one inference method on a sequence file and writes the
  machine as JSON or DOT, with an optional integer-program LP dump.
* ``graph`` dumps the history compatibility graph as ``i j`` edge lines.
* ``bench`` runs the benchmark grid and writes the results CSV.

Exit status is 0 on success, 1 on input or runtime errors and 2 on
command line usage errors.
"""

import argparse
import sys

from .bench import BenchConfig, parse_bench_config, run_bench, write_csv
from .cliques import clique_pipeline
from .cssr import cssr
from .errors import MinpfsaError
from .exact import build_ip_model, solve_msdpfsa, succ_table, to_lp_text
from .machine import build_machine, to_dot, to_json
from .sequences import count_windows, gen_fixture, parse_sequence
from .stat_tests import TESTS, TestConfig, compatibility_graph


def _read_sequence(path, tokens=False):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_sequence(text, "tokens" if tokens else "chars")


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _add_input_args(sub):
    sub.add_argument("--in", dest="infile", required=True, metavar="FILE",
                     help="sequence file, or - for stdin")
    sub.add_argument("--tokens", action="store_true",
                     help="split the input on whitespace instead of reading characters")
    sub.add_argument("--L", type=int, default=2, help="history length (default 2)")
    sub.add_argument("--alpha", type=float, default=0.05,
                     help="significance level (default 0.05)")
    sub.add_argument("--test", choices=TESTS, default="freeman-tukey",
                     help="two-sample test (default freeman-tukey)")


def cmd_gen_fixture(args):
    _write(args.out, gen_fixture().text() + "\n")
    return 0


def cmd_infer(args):
    seq = _read_sequence(args.infile, args.tokens)
    cfg = TestConfig(test=args.test, alpha=args.alpha)
    wc = count_windows(seq, args.L)
    if args.method == "cssr":
        machine = cssr(wc, cfg)
    elif args.method == "ip":
        graph = compatibility_graph(wc, cfg)
        result = solve_msdpfsa(graph, succ_table(wc, graph.vertices))
        machine = build_machine(wc, result.partition)
    else:
        machine = clique_pipeline(wc, cfg).machine
    render = to_dot if args.format == "dot" else to_json
    _write(args.out, render(machine))
    if args.lp:
        graph = compatibility_graph(wc, cfg)
        model = build_ip_model(graph, succ_table(wc, graph.vertices))
        _write(args.lp, to_lp_text(model))
    return 0


def cmd_graph(args):
    seq = _read_sequence(args.infile, args.tokens)
    cfg = TestConfig(test=args.test, alpha=args.alpha)
    wc = count_windows(seq, args.L)
    graph = compatibility_graph(wc, cfg)
    lines = []
    for i, h in enumerate(graph.vertices):
        lines.append("# %d %s" % (i, seq.alphabet.render(h)))
    for i, j in graph.edges():
        lines.append("%d %d" % (i, j))
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_bench(args):
    if args.config:
        with open(args.config) as fh:
            config = parse_bench_config(fh.read())
    else:
        config = BenchConfig()
    rows = run_bench(config)
    meta = "sources: random 2-4 state machines, seed=%d, test=%s, L=%d" % (
        config.seed, config.test, config.L)
    if args.out == "-":
        write_csv(rows, sys.stdout, meta=meta)
    else:
        with open(args.out, "w") as fh:
            write_csv(rows, fh, meta=meta)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="minpfsa",
        description="Minimum-state probabilistic finite-state automaton inference.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("gen-fixture", help="write the walkthrough sequence")
    sub.add_argument("--out", default="-", metavar="FILE",
                     help="output file (default stdout)")
    sub.set_defaults(func=cmd_gen_fixture)

    sub = subs.add_parser("infer", help="infer a machine from a sequence file")
    sub.add_argument("--method", choices=("cssr", "ip", "clique"), default="cssr")
    _add_input_args(sub)
    sub.add_argument("--format", choices=("json", "dot"), default="json",
                     help="machine output format (default json)")
    sub.add_argument("--out", default="-", metavar="FILE",
                     help="machine output file (default stdout)")
    sub.add_argument("--lp", metavar="FILE",
                     help="also write the integer program as LP text")
    sub.set_defaults(func=cmd_infer)

    sub = subs.add_parser("graph", help="dump the compatibility graph edge list")
    _add_input_args(sub)
    sub.add_argument("--out", default="-", metavar="FILE",
                     help="output file (default stdout)")
    sub.set_defaults(func=cmd_graph)

    sub = subs.add_parser("bench", help="run the benchmark grid")
    sub.add_argument("--config", metavar="FILE", help="key = value configuration file")
    sub.add_argument("--out", default="-", metavar="FILE",
                     help="CSV output (default stdout)")
    sub.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MinpfsaError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
