"""INI configuration for the immersion checker."""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Tuple

from .errors import InvalidConfigurationError, MissingFileError
from .logging import LOG_FORMATS
from .monoid import DEFAULT_MAX_ROUNDS, ClosureConfig

OUTPUT_FORMATS = ("json", "dot")
KNOWN_SECTIONS = ("closure", "validation", "output", "logging")

# Run log option -> accepted keys per section, first match wins.
_RUN_LOG_KEYS: Mapping[str, Mapping[str, Tuple[str, ...]]] = {
    "output": {
        "enabled": ("log_results",),
        "path": ("log_path",),
        "format": ("log_format",),
        "retention": ("log_retention",),
    },
    "logging": {
        "enabled": ("enabled", "log_results"),
        "path": ("path", "log_path"),
        "format": ("format", "log_format"),
        "retention": ("retention", "log_retention"),
    },
}


@dataclass(frozen=True)
class ValidationSection:
    """Names of the checks ``validate`` runs; empty means every registered check."""

    checks: Tuple[str, ...] = ()


@dataclass(frozen=True)
class OutputSection:
    format: str
    report_path: Path | None
    log_results: bool
    run_log_path: Path
    run_log_format: str
    run_log_retention: int | None


@dataclass(frozen=True)
class ImmersionCheckConfig:
    """Everything :func:`load_config` reads, plus the warnings it collected."""

    closure: ClosureConfig
    validation: ValidationSection
    output: OutputSection
    source: Path | None = None
    warnings: Tuple[str, ...] = field(default_factory=tuple)


def _default_output(root: Path) -> OutputSection:
    return OutputSection(
        format="json",
        report_path=None,
        log_results=False,
        run_log_path=(root / "logs" / "run_log.jsonl").resolve(),
        run_log_format="jsonl",
        run_log_retention=100,
    )


def default_config(base_dir: Path | None = None) -> ImmersionCheckConfig:
    """Configuration used when no INI file is given."""

    return ImmersionCheckConfig(
        closure=ClosureConfig(),
        validation=ValidationSection(),
        output=_default_output(base_dir or Path.cwd()),
    )


def load_config(path: Path) -> ImmersionCheckConfig:
    """Load and validate an INI configuration file."""

    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise MissingFileError(f"Configuration file not found: {path}") from exc
    except OSError as exc:  # pragma: no cover - filesystem guard
        raise MissingFileError(f"Could not read configuration file: {path}") from exc
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text, source=str(path))
    except configparser.Error as exc:
        raise InvalidConfigurationError(f"Malformed configuration file {path}: {exc}") from exc

    warnings = tuple(
        f"Ignoring unknown section [{section}]." for section in parser.sections() if section not in KNOWN_SECTIONS
    )
    return ImmersionCheckConfig(
        closure=_parse_closure(parser),
        validation=_parse_validation(parser),
        output=_parse_output(parser, path.resolve().parent),
        source=path,
        warnings=warnings,
    )


def _parse_closure(parser: configparser.ConfigParser) -> ClosureConfig:
    raw = parser.get("closure", "max_rounds", fallback="").strip()
    if not raw:
        return ClosureConfig(max_rounds=DEFAULT_MAX_ROUNDS)
    return ClosureConfig(max_rounds=_integer(raw, "max_rounds", "closure"))


def _parse_validation(parser: configparser.ConfigParser) -> ValidationSection:
    raw = parser.get("validation", "checks", fallback="")
    names = tuple(name.strip() for name in raw.replace("\n", ",").split(",") if name.strip())
    return ValidationSection(checks=names)


def _parse_output(parser: configparser.ConfigParser, base_dir: Path) -> OutputSection:
    output = _default_output(base_dir)
    if parser.has_section("output"):
        section = parser["output"]
        chosen = section.get("format", output.format).strip().lower()
        if chosen not in OUTPUT_FORMATS:
            raise InvalidConfigurationError("Option 'format' in [output] must be either 'json' or 'dot'.")
        report = section.get("report_path", "").strip()
        output = replace(output, format=chosen, report_path=_resolve(report, base_dir) if report else None)
    for name in ("output", "logging"):
        if parser.has_section(name):
            output = _apply_run_log(output, parser[name], base_dir)
    return output


def _apply_run_log(output: OutputSection, section: configparser.SectionProxy, base_dir: Path) -> OutputSection:
    """Override the run log options that ``section`` sets."""

    keys = _RUN_LOG_KEYS[section.name]
    changes: dict[str, object] = {}
    found = _lookup(section, keys["enabled"])
    if found is not None:
        try:
            changes["log_results"] = section.getboolean(found[0])
        except ValueError as exc:
            raise InvalidConfigurationError(f"Option '{found[0]}' in [{section.name}] must be a boolean value.") from exc
    found = _lookup(section, keys["path"])
    if found is not None and found[1]:
        changes["run_log_path"] = _resolve(found[1], base_dir)
    found = _lookup(section, keys["format"])
    if found is not None:
        chosen = found[1].lower()
        if chosen not in LOG_FORMATS:
            raise InvalidConfigurationError(f"Option '{found[0]}' in [{section.name}] must be either 'jsonl' or 'csv'.")
        changes["run_log_format"] = chosen
    found = _lookup(section, keys["retention"])
    if found is not None and found[1]:
        retention = _integer(found[1], found[0], section.name)
        changes["run_log_retention"] = retention if retention > 0 else None
    return replace(output, **changes)


def _lookup(section: configparser.SectionProxy, names: Tuple[str, ...]) -> Tuple[str, str] | None:
    for name in names:
        if name in section:
            return name, section[name].strip()
    return None


def _integer(raw: str, key: str, section: str) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise InvalidConfigurationError(f"Option '{key}' in [{section}] must be an integer value.") from exc


def _resolve(raw: str, base_dir: Path) -> Path:
    candidate = Path(raw).expanduser()
    if not candidate.is_absolute():
        candidate = base_dir / candidate
    return candidate.resolve()


__all__ = [
    "ImmersionCheckConfig",
    "LOG_FORMATS",
    "OUTPUT_FORMATS",
    "OutputSection",
    "ValidationSection",
    "default_config",
    "load_config",
]
