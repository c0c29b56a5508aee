from __future__ import annotations

from pathlib import Path

import pytest

from immersioncheck.config import default_config, load_config
from immersioncheck.errors import InvalidConfigurationError, MissingFileError
from immersioncheck.monoid import DEFAULT_MAX_ROUNDS


BASE_CONFIG = """
[closure]
max_rounds = 50
""".strip()


def _write_config(tmp_path: Path, content: str) -> Path:
    config_path = tmp_path / "config.ini"
    config_path.write_text(content, encoding="utf-8")
    return config_path


def test_defaults_without_a_file(tmp_path: Path) -> None:
    config = default_config(tmp_path)

    assert config.closure.max_rounds == DEFAULT_MAX_ROUNDS
    assert config.validation.checks == ()
    assert config.output.format == "json"
    assert config.output.log_results is False
    assert config.output.run_log_path == (tmp_path / "logs" / "run_log.jsonl").resolve()


def test_closure_and_validation_sections(tmp_path: Path) -> None:
    config_path = _write_config(
        tmp_path,
        BASE_CONFIG + "\n\n[validation]\nchecks =\n    identifiers\n    faces, connectivity\n",
    )

    config = load_config(config_path)

    assert config.closure.max_rounds == 50
    assert config.validation.checks == ("identifiers", "faces", "connectivity")
    assert config.source == config_path
    assert config.warnings == ()


def test_output_section_includes_logging_defaults(tmp_path: Path) -> None:
    config_path = _write_config(
        tmp_path,
        BASE_CONFIG
        + "\n\n[output]\nformat = dot\nreport_path = reports/build.md\n"
        + "log_results = true\nlog_format = csv\nlog_retention = 5\nlog_path = logs/history.csv\n",
    )

    config = load_config(config_path)

    assert config.output.format == "dot"
    assert config.output.report_path == (tmp_path / "reports" / "build.md").resolve()
    assert config.output.log_results is True
    assert config.output.run_log_format == "csv"
    assert config.output.run_log_retention == 5
    assert config.output.run_log_path == (tmp_path / "logs" / "history.csv").resolve()


def test_logging_section_overrides_output(tmp_path: Path) -> None:
    config_path = _write_config(
        tmp_path,
        BASE_CONFIG
        + "\n\n[output]\nlog_results = false\n"
        + "\n[logging]\nenabled = true\nformat = jsonl\nretention = 0\npath = custom/run.jsonl\n",
    )

    config = load_config(config_path)

    assert config.output.log_results is True
    assert config.output.run_log_format == "jsonl"
    assert config.output.run_log_retention is None
    assert config.output.run_log_path == (tmp_path / "custom" / "run.jsonl").resolve()


def test_unknown_sections_produce_warnings(tmp_path: Path) -> None:
    config = load_config(_write_config(tmp_path, BASE_CONFIG + "\n\n[weights]\nmonobit = 1.0\n"))

    assert config.warnings == ("Ignoring unknown section [weights].",)


@pytest.mark.parametrize(
    "extra",
    [
        "[closure]\nmax_rounds = many\n",
        "[closure]\nmax_rounds = 0\n",
        "[output]\nformat = svg\n",
        "[output]\nlog_results = maybe\n",
        "[logging]\nformat = invalid\n",
        "[logging]\nretention = forever\n",
        "[closure\n",
    ],
)
def test_invalid_values_raise(tmp_path: Path, extra: str) -> None:
    with pytest.raises(InvalidConfigurationError):
        load_config(_write_config(tmp_path, extra))


def test_missing_file_raises(tmp_path: Path) -> None:
    with pytest.raises(MissingFileError):
        load_config(tmp_path / "absent.ini")
