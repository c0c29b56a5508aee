"""Tests for :mod:`immersioncheck.reporting`."""

from __future__ import annotations

import io
from datetime import datetime, timedelta, timezone
from pathlib import Path

from immersioncheck import reporting
from immersioncheck.app import BuildOutcome
from immersioncheck.checks import Diagnostic
from immersioncheck.complex import resolve_base
from immersioncheck.coset import SubmonoidSpec, build_complex, coset_automaton
from immersioncheck.monoid import relations, schutzenberger
from immersioncheck.words import parse_word, parse_words


def _build_outcome(load, corpus_dir: Path, **overrides) -> BuildOutcome:
    base, ambient = resolve_base(load("torus"))
    generators = parse_words(["U"], base.alphabet)
    lifted = build_complex(SubmonoidSpec(ambient, "v", generators))
    fields = dict(
        ambient_path=corpus_dir / "torus.json",
        base_vertex="v",
        generators=generators,
        lifted=lifted,
        diagnostics=(),
        covering=False,
        started_at=datetime(2023, 1, 2, 3, 4, 5, tzinfo=timezone.utc),
        duration=timedelta(seconds=1.234),
    )
    fields.update(overrides)
    return BuildOutcome(**fields)


def test_automaton_to_dot_marks_roots_and_cell_loops(load) -> None:
    base, _ = resolve_base(load("triangle"))
    presentation = relations(base)
    automaton = schutzenberger(presentation, parse_word("T", presentation.alphabet)).with_roots(0, 1)

    dot = reporting.automaton_to_dot(automaton, name="S(T)")

    assert dot.startswith("digraph S_T_ {")
    assert "  0 [shape=doublecircle];" in dot
    assert "  1 [style=bold];" in dot
    assert '  0 -> 0 [label="T", dir=none];' in dot
    assert '  0 -> 1 [label="x"];' in dot


def test_coset_to_dict_lists_representatives(load) -> None:
    base, ambient = resolve_base(load("torus"))
    coset = coset_automaton(SubmonoidSpec(ambient, "v", parse_words(["U"], base.alphabet)))

    payload = reporting.coset_to_dict(coset)

    assert payload["representatives"] == {"0": "1", "1": "a", "2": "c"}
    assert payload["alphabet"] == {"x": ["a", "b", "c"], "p": {"U": 2, "L": 2}}
    assert payload["start"] == payload["end"] == 0


def test_print_build_summary(load, corpus_dir: Path) -> None:
    buffer = io.StringIO()

    reporting.print_build_summary(_build_outcome(load, corpus_dir), stream=buffer)

    assert buffer.getvalue().splitlines() == [
        "Built 'torus_H': 3 0-cells, 3 1-cells, 1 2-cells; base vertex v0.",
        "Map into 'torus': immersion; covering: no.",
    ]


def test_markdown_report_sections(load, corpus_dir: Path, tmp_path: Path) -> None:
    outcome = _build_outcome(load, corpus_dir)

    report_path = reporting.write_markdown_report(outcome, tmp_path / "reports" / "build.md")

    content = report_path.read_text(encoding="utf-8")
    assert content.startswith("# Immersion Build Report")
    assert "- **Base vertex:** `v` ↦ built vertex `v0`" in content
    assert "- **Generators:** `U`" in content
    assert "- **Covering:** no" in content
    assert "| Dimension | Cells |" in content
    assert "| 2 | 1 |" in content
    assert "- `v1`: `a`" in content
    assert "- No problems were found." in content
    assert "Generated on 2023-01-02T03:04:05+00:00 (duration: 1.23 s)" in content


def test_markdown_report_lists_diagnostics(load, corpus_dir: Path) -> None:
    problem = Diagnostic("E_STAR_INJECTIVE", "Two cells at 'v0' share an image.", ("v0",))
    outcome = _build_outcome(
        load, corpus_dir, diagnostics=(problem,), covering=None, duration=timedelta(milliseconds=42)
    )

    content = reporting.build_markdown_report(outcome)

    assert "- **Immersion:** no" in content
    assert "- **Covering:** n/a" in content
    assert f"- {problem}" in content
    assert "(duration: 42 ms)" in content
    assert reporting.format_diagnostics([problem, problem]) == f"{problem}\n{problem}"
