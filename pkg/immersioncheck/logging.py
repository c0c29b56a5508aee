"""Utilities for persisting invocation metadata to structured log files."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

LOG_FIELDNAMES = ("timestamp", "command", "arguments", "outcome", "exit_code")
"""Ordered field names used for CSV and JSON payloads."""

DEFAULT_LOG_PATH = Path("logs") / "run_log.jsonl"
"""Default location for the run history log."""

LOG_FORMATS = ("jsonl", "csv")


@dataclass(frozen=True)
class RunLogRecord:
    """Structured representation of one CLI invocation."""

    timestamp: str
    command: str
    arguments: str
    outcome: str
    exit_code: int

    @classmethod
    def for_invocation(
        cls,
        command: str,
        arguments: Sequence[str],
        outcome: str,
        exit_code: int,
        *,
        started_at: datetime | None = None,
    ) -> "RunLogRecord":
        moment = (started_at or datetime.now(timezone.utc)).astimezone(timezone.utc)
        return cls(
            timestamp=moment.isoformat(),
            command=command,
            arguments=" ".join(arguments),
            outcome=outcome,
            exit_code=exit_code,
        )

    def to_dict(self) -> dict[str, str | int]:
        return asdict(self)


def log_invocation(
    record: RunLogRecord,
    *,
    log_path: Path | None = None,
    fmt: str = "jsonl",
    retention: int | None = 100,
) -> Path:
    """Append ``record`` to the structured log and enforce retention limits."""

    target = _prepare_log_path(log_path)
    chosen = fmt.lower()
    if chosen not in LOG_FORMATS:
        raise ValueError(f"Unsupported log format: {fmt}")
    _append_record(target, record, chosen)
    if retention:
        trim_log(target, retention, fmt=chosen)
    return target


def trim_log(path: Path, max_entries: int, *, fmt: str = "jsonl") -> None:
    """Keep only the last ``max_entries`` records of ``path`` (and the CSV header)."""

    if fmt not in LOG_FORMATS:
        raise ValueError(f"Unsupported log format: {fmt}")
    if max_entries <= 0 or not path.exists():
        return
    with path.open("r", encoding="utf-8", newline="") as handle:
        lines = handle.readlines()
    header, records = (lines[:1], lines[1:]) if fmt == "csv" else ([], lines)
    if len(records) <= max_entries:
        return
    with path.open("w", encoding="utf-8", newline="") as handle:
        handle.writelines(header + records[-max_entries:])


def _prepare_log_path(path: Path | None) -> Path:
    candidate = Path(path).expanduser() if path is not None else DEFAULT_LOG_PATH
    resolved = candidate.resolve()
    resolved.parent.mkdir(parents=True, exist_ok=True)
    return resolved


def _append_record(path: Path, record: RunLogRecord, fmt: str) -> None:
    if fmt == "jsonl":
        with path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")
        return
    is_new_file = not path.exists() or path.stat().st_size == 0
    with path.open("a", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=LOG_FIELDNAMES)
        if is_new_file:
            writer.writeheader()
        writer.writerow(record.to_dict())


__all__ = ["DEFAULT_LOG_PATH", "LOG_FIELDNAMES", "LOG_FORMATS", "RunLogRecord", "log_invocation", "trim_log"]
