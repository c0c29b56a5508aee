"""Command line entry point for the immersion checker."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import NoReturn, Sequence

from .app import EXIT_ERROR, CommandResult, ImmersionCheckApp
from .config import OUTPUT_FORMATS
from .errors import ImmersionCheckError

USAGE_CODE = "E_USAGE"


class _Parser(argparse.ArgumentParser):
    """Argument parser reporting usage problems in the error-code format."""

    def error(self, message: str) -> NoReturn:
        self.exit(EXIT_ERROR, f"{USAGE_CODE}: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--config", type=Path, help="Optional INI configuration file.")
    common.add_argument(
        "--verbose",
        action="store_true",
        help="Print answers and summaries to stderr.",
    )
    return common


def _closure_options() -> argparse.ArgumentParser:
    closure = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    closure.add_argument("--max-rounds", type=int, help="Budget of fold/expand rounds for the closure.")
    return closure


def _format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format (default from configuration).")


def _add_command(commands: argparse._SubParsersAction, name: str, parents: list[argparse.ArgumentParser], summary: str) -> argparse.ArgumentParser:
    return commands.add_parser(name, parents=parents, help=summary, allow_abbrev=False)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="immersioncheck",
        description="Word problems, immersions and coverings of labelled Δ-complexes.",
        allow_abbrev=False,
    )
    common = _common_options()
    closure = _closure_options()
    commands = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    validate = _add_command(commands, "validate", [common], "Check a complex file.")
    validate.add_argument("complex", type=Path)

    labels = _add_command(commands, "labels", [common], "Print the canonical labeling of a complex.")
    labels.add_argument("complex", type=Path)

    for name, summary in (("word-eq", "Decide u = w in M(X, P)."), ("word-leq", "Decide u <= w in M(X, P).")):
        word_command = _add_command(commands, name, [common, closure], summary)
        word_command.add_argument("base", type=Path)
        word_command.add_argument("first")
        word_command.add_argument("second")

    schutz = _add_command(commands, "schutz", [common, closure], "Print the Schützenberger automaton of a word.")
    schutz.add_argument("base", type=Path)
    schutz.add_argument("word")
    _format_option(schutz)

    pi1 = _add_command(commands, "pi1", [common], "Print the fundamental group presentation of a base.")
    pi1.add_argument("base", type=Path)

    for name, summary in (
        ("check-immersion", "Decide whether the label-preserving map is an immersion."),
        ("is-covering", "Decide whether the label-preserving immersion is a covering."),
    ):
        map_command = _add_command(commands, name, [common], summary)
        map_command.add_argument("source", type=Path)
        map_command.add_argument("target", type=Path)
        map_command.add_argument("--at", help="Vertex pair v=u the map must send v to u.")
        map_command.add_argument("--map", dest="map_path", type=Path, help="Explicit cell map file.")

    coset_graph = _add_command(commands, "coset-graph", [common, closure], "Print the coset automaton.")
    coset_graph.add_argument("complex", type=Path)
    coset_graph.add_argument("--at", required=True)
    coset_graph.add_argument("--gens", nargs="*", default=[])
    _format_option(coset_graph)

    build = _add_command(commands, "build", [common, closure], "Build the immersed complex of a submonoid.")
    build.add_argument("complex", type=Path)
    build.add_argument("--at", required=True)
    build.add_argument("--gens", nargs="*", default=[])
    build.add_argument("--out", type=Path, help="Where to write the built complex (stdout when omitted).")
    build.add_argument("--map-out", type=Path, help="Where to write the immersion cell map.")

    conjugate = _add_command(commands, "conjugate", [common, closure], "Search a conjugating word.")
    conjugate.add_argument("complex", type=Path)
    conjugate.add_argument("--at", required=True)
    conjugate.add_argument("--gens-h", nargs="*", default=[])
    conjugate.add_argument("--gens-k", nargs="*", default=[])
    return parser


def _dispatch(app: ImmersionCheckApp, args: argparse.Namespace) -> CommandResult:
    command = args.command
    if command == "validate":
        return app.validate(args.complex, verbose=args.verbose)
    if command == "labels":
        return app.labels(args.complex)
    if command == "word-eq":
        return app.word_eq(args.base, args.first, args.second, verbose=args.verbose)
    if command == "word-leq":
        return app.word_leq(args.base, args.first, args.second, verbose=args.verbose)
    if command == "schutz":
        return app.schutz(args.base, args.word, fmt=args.format)
    if command == "pi1":
        return app.pi1(args.base)
    if command == "check-immersion":
        return app.check_immersion(args.source, args.target, at=args.at, map_path=args.map_path, verbose=args.verbose)
    if command == "is-covering":
        return app.is_covering(args.source, args.target, at=args.at, map_path=args.map_path, verbose=args.verbose)
    if command == "coset-graph":
        return app.coset_graph(args.complex, at=args.at, generators=args.gens, fmt=args.format)
    if command == "build":
        return app.build(
            args.complex,
            at=args.at,
            generators=args.gens,
            out=args.out,
            map_out=args.map_out,
            verbose=args.verbose,
        )
    if command == "conjugate":
        return app.conjugate(args.complex, at=args.at, generators_h=args.gens_h, generators_k=args.gens_k)
    raise ImmersionCheckError(f"Unknown command '{command}'.")  # pragma: no cover - argparse guards this


def _emit(result: CommandResult) -> None:
    if result.stdout:
        sys.stdout.write(result.stdout if result.stdout.endswith("\n") else result.stdout + "\n")
    for line in result.stderr:
        print(line, file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    arguments = list(sys.argv[1:] if argv is None else argv)
    args = _build_parser().parse_args(arguments)
    app: ImmersionCheckApp | None = None
    try:
        app = ImmersionCheckApp.from_config_path(args.config).with_max_rounds(getattr(args, "max_rounds", None))
        if args.verbose:
            app.print_warnings()
        result = _dispatch(app, args)
    except ImmersionCheckError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        result = CommandResult(EXIT_ERROR, outcome=exc.code)
    except Exception as exc:  # pragma: no cover - unexpected failure
        print(f"E_INTERNAL: {exc}", file=sys.stderr)
        result = CommandResult(EXIT_ERROR, outcome="E_INTERNAL")
    else:
        _emit(result)
    if app is not None:
        try:
            app.record_invocation(args.command, arguments, result.outcome, result.exit_code)
        except (OSError, ValueError) as exc:
            print(f"Warning: could not write the run log: {exc}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":  # pragma: no cover - CLI entry point
    sys.exit(main())
