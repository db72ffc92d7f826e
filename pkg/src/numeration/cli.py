"""Command-line interface: ``ans <command> [source options] ...``.

Exit codes: 0 success or YES, 2 domain-negative answer (word not in the
language, NO), 1 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bundled
from .automata import AutomatonError, Nfa, OrderedAlphabet, dump_automaton, load_automaton, minimize, to_dot
from .congruence import (
    RecognizableSetSpec,
    congruence_automaton,
    progressions,
    recognizable_set_dfa,
)
from .decision import DEFAULT_WITNESS_DEPTH, is_enumerating_series
from .exactalg import SemiringError
from .regex import RegexSyntaxError, parse_regex
from .series import LinearRepresentation, SeriesFormatError
from .system import (
    FiniteLanguageError,
    NotInLanguageError,
    enumerate_words,
    enumerating_series,
    new_ans,
    representation,
    value,
    value_trace,
)

EXIT_OK, EXIT_ERROR, EXIT_NO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _source_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("system source (exactly one of --regex, --automaton, --system)")
    g.add_argument("--regex", help="regular expression of the language")
    g.add_argument("--alphabet", help="ordered alphabet for --regex, e.g. 'ab' means a < b")
    g.add_argument("--automaton", type=Path, help="automaton file")
    g.add_argument("--system", choices=sorted(bundled.BUNDLED), help="bundled example system")
    return p


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--epsilon", default='""', metavar="TOKEN", help='how the empty word is written (default: "")')
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common, source = _common_options(), _source_options()
    parser = _Parser(prog="ans", description="Rational abstract numeration systems as weighted automata.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("value", parents=[common, source], help="value of a word")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="print the alpha/beta/gamma table")

    p = sub.add_parser("repr", parents=[common, source], help="representation of a number")
    p.add_argument("n", type=int)

    p = sub.add_parser("enum", parents=[common, source], help="list consecutive representations")
    p.add_argument("start", type=int)
    p.add_argument("count", type=int)

    p = sub.add_parser("series", parents=[common], help="enumerating series")
    ss = p.add_subparsers(dest="series_command", required=True, parser_class=_Parser)
    b = ss.add_parser("build", parents=[common, source], help="build the enumerating series")
    b.add_argument("-o", "--output", type=Path, help="write the series document here")
    b.add_argument("--no-trim", action="store_true", help="write the untrimmed product representation")
    c = ss.add_parser("coeff", parents=[common, source], help="coefficient of a word")
    c.add_argument("word")
    c.add_argument("--series", type=Path, help="series file (instead of a system source)")

    p = sub.add_parser("congruence", parents=[common, source], help="automaton of a recognisable set of numbers")
    p.add_argument("--mod", type=int, action="append", default=[], metavar="P")
    p.add_argument("--residue", type=int, action="append", default=[], metavar="R")
    p.add_argument("--include", default="", metavar="N,...")
    p.add_argument("--exclude", default="", metavar="N,...")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--dot", type=Path, metavar="PATH", help="write Graphviz source")
    p.add_argument("-o", "--output", type=Path, help="write the automaton file")

    p = sub.add_parser("decide-enum", parents=[common], help="is a series an enumerating series?")
    p.add_argument("series_file", type=Path)
    p.add_argument("--depth", type=int, default=DEFAULT_WITNESS_DEPTH, help="witness search depth")

    p = sub.add_parser("export-dot", parents=[common, source], help="Graphviz source of the system automaton")
    p.add_argument("-o", "--output", type=Path)
    return parser


def _load_source(args) -> Nfa:
    given = [x for x in (args.regex, args.automaton, args.system) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --regex, --automaton, --system")
    if args.regex is not None:
        if not args.alphabet:
            raise UsageError("--regex needs --alphabet")
        return parse_regex(args.regex, OrderedAlphabet.parse(args.alphabet))
    if args.alphabet:
        raise UsageError("--alphabet only applies to --regex")
    if args.automaton is not None:
        return load_automaton(args.automaton.read_text())
    return bundled.bundled_automaton(args.system)


def _word_arg(w: str, args) -> str:
    return "" if w in ("", args.epsilon) else w


def _show(w: str, args) -> str:
    return w if w else args.epsilon


def _numbers(text: str) -> set[int]:
    try:
        return {int(x) for x in text.replace(",", " ").split()}
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _emit(path: Path | None, text: str, out) -> None:
    if path is None:
        out.write(text)
    else:
        path.write_text(text)


def run(args, out) -> int:
    cmd = args.command
    if cmd == "decide-enum":
        s = LinearRepresentation.loads(args.series_file.read_text())
        verdict = is_enumerating_series(s, depth=args.depth)
        if verdict:
            print("YES", file=out)
            return EXIT_OK
        if verdict.witness is None:
            print(f"NO {verdict.reason.replace(' ', '-')}", file=out)
        else:
            print(f"NO {_show(verdict.witness, args)} expected={verdict.expected} actual={verdict.actual}",
                  file=out)
        return EXIT_NO

    if cmd == "series" and args.series_command == "coeff" and args.series is not None:
        s = LinearRepresentation.loads(args.series.read_text())
        print(s.coefficient(_word_arg(args.word, args)), file=out)
        return EXIT_OK

    language = _load_source(args)
    if cmd == "export-dot":
        _emit(args.output, to_dot(minimize(language), name="system"), out)
        return EXIT_OK

    ans = new_ans(language)
    if args.verbose:
        print(f"# states: {ans.k}", file=sys.stderr)

    if cmd == "value":
        w = _word_arg(args.word, args)
        if args.trace:
            trace = value_trace(ans, w)
            print(trace.table(), file=out)
            if not trace.accepted:
                print(f"word {_show(w, args)} is not in language", file=sys.stderr)
                return EXIT_NO
            print(trace.value, file=out)
            return EXIT_OK
        try:
            print(value(ans, w), file=out)
        except NotInLanguageError:
            print(f"word {_show(w, args)} is not in language", file=sys.stderr)
            return EXIT_NO
        return EXIT_OK

    if cmd == "repr":
        if args.n < 0:
            raise UsageError("n must be non-negative")
        print(_show(representation(ans, args.n), args), file=out)
        return EXIT_OK

    if cmd == "enum":
        if args.start < 0 or args.count < 0:
            raise UsageError("start and count must be non-negative")
        for w in enumerate_words(ans, args.start, args.count):
            print(_show(w, args), file=out)
        return EXIT_OK

    if cmd == "series":
        enum = enumerating_series(ans)
        if args.series_command == "build":
            rep = enum.product_rep if args.no_trim else enum.final_rep
            if args.output is not None:
                args.output.write_text(rep.dumps())
            elif args.verbose:
                sys.stderr.write(rep.dumps())
            print(f"dimension: {enum.pre_trim_dimension}", file=out)
            if args.verbose:
                print(f"# trimmed dimension: {enum.final_rep.dimension}", file=sys.stderr)
            return EXIT_OK
        print(enum.final_rep.coefficient(_word_arg(args.word, args)), file=out)
        return EXIT_OK

    if cmd == "congruence":
        if len(args.mod) != len(args.residue):
            raise UsageError("give one --residue per --mod")
        try:
            progs = progressions(zip(args.mod, args.residue))
            spec = RecognizableSetSpec(progs, _numbers(args.include), _numbers(args.exclude))
        except ValueError as e:
            raise UsageError(str(e)) from None
        labels = None
        if len(progs) == 1 and not spec.include and not spec.exclude:
            built = congruence_automaton(ans, progs[0])
            dfa = built.dfa
            if args.minimize:
                dfa = minimize(dfa)
            else:
                labels = built.label_strings()
        else:
            dfa = recognizable_set_dfa(ans, spec)
        if args.output is not None:
            args.output.write_text(dump_automaton(dfa))
        if args.dot is not None:
            args.dot.write_text(to_dot(dfa, name="congruence", labels=labels))
        print(f"states: {dfa.states}", file=out)
        return EXIT_OK

    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return run(args, out)
    except (UsageError, AutomatonError, FiniteLanguageError, RegexSyntaxError, SeriesFormatError,
            SemiringError, OSError, ValueError) as e:
        print(f"ans: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
