"""Application orchestration for the immersion checker CLI."""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from functools import lru_cache
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Dict, Mapping, Sequence, Tuple

from . import logging as run_logging
from . import reporting
from .checks import DEFAULT_CHECKS, ComplexCheck, Diagnostic, build_check_suite, run_checks
from .complex import BaseComplex, DeltaComplex, base_of, canonical_labeling, merge_bases, resolve_base
from .config import ImmersionCheckConfig, default_config, load_config
from .coset import LiftedComplex, SubmonoidSpec, are_conjugate, build_complex, coset_automaton
from .errors import InvalidComplexError, InvalidInputError
from .immersion import CellMap, check_immersion, infer_map, is_covering
from .io import (
    cell_map_to_dict,
    complex_to_dict,
    dump_json,
    load_cell_map,
    load_complex,
    parse_vertex_pair,
    write_text,
)
from .monoid import ClosureConfig, PresentedMonoid, pi1_presentation
from .words import Word, format_word, parse_word, parse_words

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
MONOID_CACHE_SIZE = 16


@dataclass(frozen=True)
class CommandResult:
    """What a subcommand wants printed and the exit code it ends with."""

    exit_code: int
    stdout: str = ""
    stderr: Tuple[str, ...] = ()
    outcome: str = "ok"


@dataclass(frozen=True)
class BuildOutcome:
    """Summary of a ``build`` run, used for reports."""

    ambient_path: Path
    base_vertex: str
    generators: Tuple[Word, ...]
    lifted: LiftedComplex
    diagnostics: Tuple[Diagnostic, ...]
    covering: bool | None
    started_at: datetime
    duration: timedelta


def _answer(flag: bool, *, verbose: bool, detail: str = "") -> CommandResult:
    text = "true" if flag else "false"
    messages: Tuple[str, ...] = ((detail or text),) if verbose else ()
    return CommandResult(EXIT_TRUE if flag else EXIT_FALSE, stderr=messages, outcome=text)


class ImmersionCheckApp:
    """High level service wiring configuration, loading, algorithms and rendering."""

    def __init__(
        self,
        config: ImmersionCheckConfig | None = None,
        checks: Sequence[ComplexCheck] | Mapping[str, ComplexCheck] | None = None,
    ) -> None:
        self.config = config or default_config()
        if checks is None:
            registry: Dict[str, ComplexCheck] = dict(DEFAULT_CHECKS)
        elif isinstance(checks, Mapping):
            registry = dict(checks)
        else:
            registry = {check.name: check for check in checks}
        self._checks = registry
        self._monoids = lru_cache(maxsize=MONOID_CACHE_SIZE)(PresentedMonoid.from_base)

    @classmethod
    def from_config_path(cls, path: Path | None) -> "ImmersionCheckApp":
        return cls(load_config(path) if path is not None else default_config())

    def with_max_rounds(self, max_rounds: int | None) -> "ImmersionCheckApp":
        if max_rounds is None:
            return self
        closure = ClosureConfig(max_rounds=max_rounds)
        config = ImmersionCheckConfig(
            closure=closure,
            validation=self.config.validation,
            output=self.config.output,
            source=self.config.source,
            warnings=self.config.warnings,
        )
        return ImmersionCheckApp(config, self._checks)

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------
    def validate(self, path: Path, *, verbose: bool = False) -> CommandResult:
        problems = run_checks(load_complex(path), self._resolve_checks())
        if problems:
            return CommandResult(EXIT_ERROR, stderr=(reporting.format_diagnostics(problems),), outcome=problems[0].code)
        return CommandResult(EXIT_TRUE, stderr=("valid",) if verbose else ())

    def labels(self, path: Path) -> CommandResult:
        base, labeled = canonical_labeling(self._load_valid(path))
        payload = {"base": complex_to_dict(base.complex), "complex": complex_to_dict(labeled)}
        return CommandResult(EXIT_TRUE, stdout=dump_json(payload))

    def word_eq(self, base_path: Path, first: str, second: str, *, verbose: bool = False) -> CommandResult:
        monoid = self._monoid(self._load_base(base_path))
        left, right = parse_word(first, monoid.alphabet), parse_word(second, monoid.alphabet)
        return _answer(monoid.equal(left, right), verbose=verbose)

    def word_leq(self, base_path: Path, lower: str, upper: str, *, verbose: bool = False) -> CommandResult:
        monoid = self._monoid(self._load_base(base_path))
        left, right = parse_word(lower, monoid.alphabet), parse_word(upper, monoid.alphabet)
        return _answer(monoid.leq(left, right), verbose=verbose)

    def schutz(self, base_path: Path, word: str, *, fmt: str | None = None) -> CommandResult:
        monoid = self._monoid(self._load_base(base_path))
        automaton = monoid.schutzenberger(parse_word(word, monoid.alphabet))
        if self._format(fmt) == "dot":
            return CommandResult(EXIT_TRUE, stdout=reporting.automaton_to_dot(automaton, name="schutzenberger"))
        return CommandResult(EXIT_TRUE, stdout=dump_json(reporting.automaton_to_dict(automaton)))

    def pi1(self, base_path: Path) -> CommandResult:
        return CommandResult(EXIT_TRUE, stdout=str(pi1_presentation(self._load_base(base_path))))

    def check_immersion(
        self,
        source_path: Path,
        target_path: Path,
        *,
        at: str | None = None,
        map_path: Path | None = None,
        verbose: bool = False,
    ) -> CommandResult:
        mapping = self._resolve_map(source_path, target_path, at, map_path)
        problems = check_immersion(mapping)
        if problems:
            return CommandResult(EXIT_FALSE, stderr=(reporting.format_diagnostics(problems),), outcome="false")
        return _answer(True, verbose=verbose)

    def is_covering(
        self,
        source_path: Path,
        target_path: Path,
        *,
        at: str | None = None,
        map_path: Path | None = None,
        verbose: bool = False,
    ) -> CommandResult:
        mapping = self._resolve_map(source_path, target_path, at, map_path)
        return _answer(is_covering(mapping), verbose=verbose)

    def coset_graph(self, path: Path, *, at: str, generators: Sequence[str], fmt: str | None = None) -> CommandResult:
        spec = self._spec(path, at, generators)
        coset = coset_automaton(spec, self.config.closure)
        if self._format(fmt) == "dot":
            return CommandResult(EXIT_TRUE, stdout=reporting.automaton_to_dot(coset.automaton, name="coset"))
        return CommandResult(EXIT_TRUE, stdout=dump_json(reporting.coset_to_dict(coset)))

    def build(
        self,
        path: Path,
        *,
        at: str,
        generators: Sequence[str],
        out: Path | None = None,
        map_out: Path | None = None,
        verbose: bool = False,
    ) -> CommandResult:
        started_at = datetime.now(timezone.utc)
        timer_start = time.perf_counter()
        spec = self._spec(path, at, generators)
        lifted = build_complex(spec, self.config.closure)
        diagnostics = check_immersion(lifted.immersion)
        covering = None if diagnostics else is_covering(lifted.immersion)
        outcome = BuildOutcome(
            ambient_path=path,
            base_vertex=at,
            generators=spec.generators,
            lifted=lifted,
            diagnostics=diagnostics,
            covering=covering,
            started_at=started_at,
            duration=timedelta(seconds=time.perf_counter() - timer_start),
        )
        rendered = dump_json(complex_to_dict(lifted.complex))
        stdout = rendered
        if out is not None:
            write_text(out, rendered)
            stdout = ""
        if map_out is not None:
            write_text(map_out, dump_json(cell_map_to_dict(lifted.immersion)))
        if self.config.output.report_path is not None:
            reporting.write_markdown_report(outcome, self.config.output.report_path)
        if verbose:
            reporting.print_build_summary(outcome)
        return CommandResult(EXIT_TRUE, stdout=stdout)

    def conjugate(
        self, path: Path, *, at: str, generators_h: Sequence[str], generators_k: Sequence[str]
    ) -> CommandResult:
        first = self._spec(path, at, generators_h)
        second = SubmonoidSpec(first.ambient, at, self._words(generators_k, first.ambient))
        witness = are_conjugate(first, second, self.config.closure)
        if witness is None:
            return CommandResult(EXIT_FALSE, stdout="none", outcome="none")
        return CommandResult(EXIT_TRUE, stdout=format_word(witness), outcome=format_word(witness))

    def record_invocation(self, command: str, arguments: Sequence[str], outcome: str, exit_code: int) -> Path | None:
        """Append one record to the run log when logging is enabled."""

        output = self.config.output
        if not output.log_results:
            return None
        record = run_logging.RunLogRecord.for_invocation(command, arguments, outcome, exit_code)
        return run_logging.log_invocation(
            record,
            log_path=output.run_log_path,
            fmt=output.run_log_format,
            retention=output.run_log_retention,
        )

    # ------------------------------------------------------------------
    # Pipeline stages
    # ------------------------------------------------------------------
    def _resolve_checks(self) -> Tuple[ComplexCheck, ...]:
        names = self.config.validation.checks
        if not names:
            return tuple(self._checks.values())
        return tuple(build_check_suite(names, registry=self._checks))

    def _load_valid(self, path: Path) -> DeltaComplex:
        complex_ = load_complex(path)
        problems = run_checks(complex_, self._resolve_checks())
        if problems:
            raise InvalidComplexError(f"Complex '{complex_.name}' is invalid: {problems[0].message}", problems)
        return complex_

    def _load_labeled(self, path: Path) -> Tuple[BaseComplex, DeltaComplex]:
        return resolve_base(self._load_valid(path))

    def _load_base(self, path: Path) -> BaseComplex:
        return base_of(self._load_valid(path))

    def _monoid(self, base: BaseComplex) -> PresentedMonoid:
        return self._monoids(base, self.config.closure)

    def _words(self, texts: Sequence[str], ambient: DeltaComplex) -> Tuple[Word, ...]:
        base, _ = resolve_base(ambient)
        return parse_words(texts, base.alphabet)

    def _spec(self, path: Path, at: str, generators: Sequence[str]) -> SubmonoidSpec:
        _, ambient = self._load_labeled(path)
        return SubmonoidSpec(ambient, at, self._words(generators, ambient))

    def _resolve_map(
        self, source_path: Path, target_path: Path, at: str | None, map_path: Path | None
    ) -> CellMap:
        source_base, source = self._load_labeled(source_path)
        target_base, target = self._load_labeled(target_path)
        merge_bases(target_base, source_base)
        if map_path is not None:
            return load_cell_map(map_path, source, target)
        if at is None:
            raise InvalidInputError("Either --at v=u or --map <file> is required.")
        start, image = parse_vertex_pair(at)
        return infer_map(source, target, start, image)

    # ------------------------------------------------------------------
    # Rendering helpers
    # ------------------------------------------------------------------
    def _format(self, fmt: str | None) -> str:
        return fmt or self.config.output.format

    def print_warnings(self) -> None:
        for warning in self.config.warnings:
            print(f"Warning: {warning}", file=sys.stderr)


__all__ = ["BuildOutcome", "CommandResult", "EXIT_ERROR", "EXIT_FALSE", "EXIT_TRUE", "ImmersionCheckApp"]
