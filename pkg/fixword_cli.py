import argparse
import contextvars
import sys

from boolean_network import Word
from analyzers.network_analyzer import fixes
from analyzers.word_analyzer import is_k_universal, is_path_word, is_path_universal
from generators.word_generator import gray_word, zigzag_universal, path_universal_word
from generators.network_generator import FAMILY_KINDS, FamilySpec
from generators.fixing_word_generator import (
    as_family,
    greedy_fix_word,
    acyclic_instance_word,
    tree_word,
    full_tree_word,
    feedback_word,
    symmetric_conjunctive_word,
)
from oracle import (
    shortest_fixing_word,
    shortest_family_word,
    shortest_universal_word,
    shortest_path_universal_word,
    fixable_fraction,
    sample_fixable_fraction,
)
from network_io import (
    read_network,
    read_digraph,
    parse_word,
    format_word,
    export_dot,
    save_to_file,
)
from utils.network_summary import summarize_network
from fixing_core import (
    accept_cost,
    set_verbose,
    ParseError,
    PreconditionError,
    InfeasibleSizeError,
    BudgetExceededError,
)

# --- Exit codes ---
EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_PRECONDITION = 4

SYNTH_FAMILIES = ("tree", "full-tree", "feedback", "symmetric-conj", "path-universal", "acyclic-instance", "greedy")


class Report:
    """Writes `key: value` lines, or `key=value` lines under --porcelain."""

    def __init__(self, porcelain, stream=None):
        self.porcelain = porcelain
        self.stream = stream or sys.stdout

    def _format(self, value):
        if isinstance(value, bool):
            return "true" if value else "false"
        if value is None:
            return "n/a"
        if isinstance(value, Word):
            return format_word(value)
        if isinstance(value, (list, tuple)):
            return ("," if self.porcelain else ", ").join(self._format(v) for v in value)
        return str(value)

    def field(self, key, value):
        separator = "=" if self.porcelain else ": "
        print(f"{key}{separator}{self._format(value)}", file=self.stream)

    def verdict(self, key, value):
        self.field(key, value)
        return EXIT_TRUE if value else EXIT_FALSE


def _word_argument(text):
    try:
        return parse_word(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(e.message)


def _family_from_args(args):
    if args.net:
        return FamilySpec.explicit([read_network(path) for path in args.net])
    if args.graph:
        G = read_digraph(args.graph)
        return FamilySpec.monotone_tree(G) if args.kind == "monotone-tree" else FamilySpec.monotone_on(G)
    if args.kind == "monotone-tree":
        raise ValueError("--kind monotone-tree needs --graph")
    if args.kind and args.n:
        return FamilySpec(args.kind, args.n)
    raise ValueError("give --net files, --graph, or --kind together with -n")


# --- commands ---

def cmd_analyze(args, report):
    f = read_network(args.network)
    for key, value in summarize_network(f).items():
        report.field(key, value)
    return EXIT_TRUE


def cmd_verify(args, report):
    f = read_network(args.network)
    report.field("word", args.word)
    report.field("length", len(args.word))
    return report.verdict("fixes", fixes(f, args.word))


def _synthesize(args):
    """Returns (word, family to check it against or None, extra check)."""
    family = args.family
    if family in ("tree", "full-tree", "feedback"):
        if not args.graph:
            raise ValueError(f"synth --family {family} needs --graph")
        G = read_digraph(args.graph)
        if family == "tree":
            return tree_word(G), FamilySpec.monotone_tree(G), None
        word = full_tree_word(G) if family == "full-tree" else feedback_word(G)
        return word, FamilySpec.monotone_on(G), None
    if family == "symmetric-conj":
        if not args.n:
            raise ValueError("synth --family symmetric-conj needs -n")
        return symmetric_conjunctive_word(args.n), FamilySpec("conjunctive-symmetric", args.n), None
    if family == "path-universal":
        if not args.n:
            raise ValueError("synth --family path-universal needs -n")
        word = path_universal_word(args.n)
        return word, None, lambda w: is_path_universal(w, args.n)
    if family == "acyclic-instance":
        if not args.net or len(args.net) != 1:
            raise ValueError("synth --family acyclic-instance needs exactly one --net")
        f = read_network(args.net[0])
        return acyclic_instance_word(f), FamilySpec.explicit([f]), None
    spec = _family_from_args(args)
    return greedy_fix_word(spec), spec, None


def cmd_synth(args, report):
    word, family, check = _synthesize(args)
    report.field("family", args.family)
    report.field("word", word)
    report.field("length", len(word))
    if args.save:
        save_to_file(f"synth_{args.family}", "txt", format_word(word) + "\n")
    if not args.check:
        return EXIT_TRUE
    if check is not None:
        return report.verdict("check", check(word))
    return report.verdict("check", all(fixes(f, word) for f in as_family(family)))


def cmd_oracle_min_length(args, report):
    word = shortest_fixing_word(read_network(args.network))
    if word is None:
        report.field("min_length", None)
        return report.verdict("fixable", False)
    report.field("min_length", len(word))
    report.field("word", word)
    return EXIT_TRUE


def cmd_oracle_family(args, report):
    spec = _family_from_args(args)
    budget = args.budget if args.budget is not None else 2 * spec.n + 4
    word = shortest_family_word(spec, budget)
    report.field("min_length", len(word))
    report.field("word", word)
    return EXIT_TRUE


def cmd_oracle_lambda(args, report):
    word = shortest_universal_word(args.n, args.k)
    report.field("lambda", len(word))
    report.field("word", word)
    return EXIT_TRUE


def cmd_oracle_big_lambda(args, report):
    word = shortest_path_universal_word(args.n)
    report.field("big_lambda", len(word))
    report.field("word", word)
    return EXIT_TRUE


def cmd_oracle_phi(args, report):
    if args.sample is not None:
        if args.seed is None:
            raise ValueError("oracle phi --sample needs --seed")
        estimate = sample_fixable_fraction(args.n, args.sample, args.seed)
        report.field("phi_estimate", f"{estimate:.6f}")
        report.field("samples", args.sample)
        return EXIT_TRUE
    phi = fixable_fraction(args.n)
    report.field("phi", phi)
    report.field("phi_float", f"{float(phi):.6f}")
    return EXIT_TRUE


def cmd_words_universal(args, report):
    report.field("length", len(args.word))
    return report.verdict("universal", is_k_universal(args.word, args.n, args.k))


def cmd_words_path_word(args, report):
    return report.verdict("path_word", is_path_word(args.word, args.n))


def cmd_words_path_universal(args, report):
    report.field("length", len(args.word))
    return report.verdict("path_universal", is_path_universal(args.word, args.n))


def cmd_words_gray(args, report):
    word = gray_word(args.n)
    report.field("word", word)
    report.field("length", len(word))
    return EXIT_TRUE


def cmd_words_zigzag(args, report):
    word = zigzag_universal(args.n, args.k)
    report.field("word", word)
    report.field("length", len(word))
    return EXIT_TRUE


def cmd_export_dot(args, report):
    if args.kind == "digraph":
        text = export_dot(read_digraph(args.source))
    else:
        text = export_dot(read_network(args.source), args.kind)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
        report.field("written", args.output)
    elif args.save:
        report.field("written", save_to_file(f"{args.kind}_graph", "dot", text))
    else:
        report.stream.write(text)
    return EXIT_TRUE


# --- parser ---

def _add_family_arguments(parser):
    parser.add_argument("--net", action="append", help="Network file (repeatable).")
    parser.add_argument("--graph", help="Digraph file.")
    parser.add_argument("--kind", choices=[k for k in FAMILY_KINDS if k not in ("explicit", "monotone-on")],
                        help="Enumerated family kind.")
    parser.add_argument("-n", type=int, help="Number of components.")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fixword",
        description="Fixing words for asynchronous Boolean networks: analysis, synthesis and exact oracles.",
    )
    parser.add_argument("--porcelain", action="store_true", help="Machine-readable key=value output.")
    parser.add_argument("--accept-cost", action="store_true", help="Lift every size limit.")
    parser.add_argument("--verbose", action="store_true", help="Progress lines on stderr.")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="Report fixed points and structural properties.")
    analyze.add_argument("network")
    analyze.set_defaults(handler=cmd_analyze)

    verify = commands.add_parser("verify", help="Check whether a word fixes a network.")
    verify.add_argument("network")
    verify.add_argument("-w", "--word", type=_word_argument, required=True)
    verify.set_defaults(handler=cmd_verify)

    synth = commands.add_parser("synth", help="Build a fixing word for a family.")
    synth.add_argument("--family", choices=SYNTH_FAMILIES, required=True)
    _add_family_arguments(synth)
    synth.add_argument("--check", action="store_true", help="Re-verify the word against the whole family.")
    synth.add_argument("--save", action="store_true", help="Also save the word under the outputs directory.")
    synth.set_defaults(handler=cmd_synth)

    oracle = commands.add_parser("oracle", help="Exact values by exhaustive search.")
    oracles = oracle.add_subparsers(dest="oracle", required=True)
    min_length = oracles.add_parser("min-length")
    min_length.add_argument("network")
    min_length.set_defaults(handler=cmd_oracle_min_length)
    family = oracles.add_parser("family-min-length")
    _add_family_arguments(family)
    family.add_argument("--budget", type=int)
    family.set_defaults(handler=cmd_oracle_family)
    lam = oracles.add_parser("lambda")
    lam.add_argument("-n", type=int, required=True)
    lam.add_argument("-k", type=int, default=0)
    lam.set_defaults(handler=cmd_oracle_lambda)
    big_lambda = oracles.add_parser("big-lambda")
    big_lambda.add_argument("-n", type=int, required=True)
    big_lambda.set_defaults(handler=cmd_oracle_big_lambda)
    phi = oracles.add_parser("phi")
    phi.add_argument("-n", type=int, required=True)
    phi.add_argument("--sample", type=int)
    phi.add_argument("--seed", type=int)
    phi.set_defaults(handler=cmd_oracle_phi)

    words = commands.add_parser("words", help="Word checks and constructions.")
    word_commands = words.add_subparsers(dest="words", required=True)
    universal = word_commands.add_parser("check-universal")
    universal.add_argument("word", type=_word_argument)
    universal.add_argument("-n", type=int, required=True)
    universal.add_argument("-k", type=int, default=0)
    universal.set_defaults(handler=cmd_words_universal)
    path_word = word_commands.add_parser("check-path-word")
    path_word.add_argument("word", type=_word_argument)
    path_word.add_argument("-n", type=int, required=True)
    path_word.set_defaults(handler=cmd_words_path_word)
    path_universal = word_commands.add_parser("check-path-universal")
    path_universal.add_argument("word", type=_word_argument)
    path_universal.add_argument("-n", type=int, required=True)
    path_universal.set_defaults(handler=cmd_words_path_universal)
    gray = word_commands.add_parser("gray")
    gray.add_argument("-n", type=int, required=True)
    gray.set_defaults(handler=cmd_words_gray)
    zigzag = word_commands.add_parser("zigzag")
    zigzag.add_argument("-n", type=int, required=True)
    zigzag.add_argument("-k", type=int, default=0)
    zigzag.set_defaults(handler=cmd_words_zigzag)

    dot = commands.add_parser("export-dot", help="Render a graph as Graphviz DOT.")
    dot.add_argument("kind", choices=("async", "interaction", "digraph"))
    dot.add_argument("source", help="Network file, or digraph file for 'digraph'.")
    dot.add_argument("-o", "--output", help="Write to this file instead of stdout.")
    dot.add_argument("--save", action="store_true", help="Save under the outputs directory.")
    dot.set_defaults(handler=cmd_export_dot)
    return parser


def _dispatch(args, report):
    if args.accept_cost:
        accept_cost(True)
    if args.verbose:
        set_verbose(True)
    try:
        return args.handler(args, report)
    except ParseError as e:
        print(f"❌ Parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InfeasibleSizeError, BudgetExceededError) as e:
        print(f"⚠️  {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except PreconditionError as e:
        print(f"❌ Precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (OSError, ValueError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


def run(argv=None, stream=None):
    """
    Runs one command line.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].
        stream: Where the report goes; defaults to stdout.

    Returns:
        The exit code: 0 success or true, 1 false, 2 parse or usage error,
        3 size limit or budget exceeded, 4 precondition violated.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    report = Report(args.porcelain, stream)
    # flags stay local to this run
    return contextvars.copy_context().run(_dispatch, args, report)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
