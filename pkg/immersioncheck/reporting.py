"""Rendering of automata, complexes and build reports."""

from __future__ import annotations

import sys
import textwrap
from dataclasses import dataclass
from datetime import timezone
from pathlib import Path
from string import Template
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Sequence, TextIO

from .automata import InverseAutomaton
from .words import format_word

if TYPE_CHECKING:
    from datetime import timedelta

    from .app import BuildOutcome
    from .checks.base import Diagnostic
    from .coset import CosetAutomaton


DOT_TEMPLATE = Template(
    textwrap.dedent(
        """
        digraph ${name} {
          rankdir=LR;
          node [shape=circle];
        ${nodes}
        ${edges}
        }
        """
    ).strip()
)


@dataclass(frozen=True)
class ReportTemplate:
    """Container for the markdown build report template."""

    template: Template = Template(
        textwrap.dedent(
            """
            # Immersion Build Report

            ## Summary
            ${summary}

            ## Cells
            ${cell_table}

            ## Coset Representatives
            ${representatives}

            ## Immersion Diagnostics
            ${diagnostics}

            _Generated on ${timestamp} (duration: ${duration})._
            """
        ).strip()
    )


DEFAULT_TEMPLATE = ReportTemplate()


def automaton_to_dot(automaton: InverseAutomaton, *, name: str = "automaton") -> str:
    """DOT text: double circle at the start root, bold border at the end root."""

    nodes: List[str] = []
    for vertex in automaton.vertices:
        attributes = []
        if vertex == automaton.start:
            attributes.append("shape=doublecircle")
        if vertex == automaton.end:
            attributes.append("style=bold")
        suffix = f" [{', '.join(attributes)}]" if attributes else ""
        nodes.append(f"  {vertex}{suffix};")
    edges: List[str] = []
    for edge in automaton.edges:
        undirected = ", dir=none" if edge.label in automaton.alphabet.p_letters else ""
        edges.append(f'  {edge.source} -> {edge.target} [label="{edge.label}"{undirected}];')
    return DOT_TEMPLATE.substitute(name=_dot_identifier(name), nodes="\n".join(nodes), edges="\n".join(edges))


def _dot_identifier(name: str) -> str:
    cleaned = "".join(character if character.isalnum() or character == "_" else "_" for character in name)
    return cleaned if cleaned and not cleaned[0].isdigit() else f"g_{cleaned}"


def automaton_to_dict(automaton: InverseAutomaton) -> Dict[str, Any]:
    return {
        "alphabet": {
            "x": list(automaton.alphabet.x_letters),
            "p": dict(automaton.alphabet.p_letters),
        },
        "vertices": list(automaton.vertices),
        "edges": [
            {"source": edge.source, "label": edge.label, "target": edge.target}
            for edge in automaton.edges
        ],
        "start": automaton.start,
        "end": automaton.end,
    }


def coset_to_dict(coset: "CosetAutomaton") -> Dict[str, Any]:
    payload = automaton_to_dict(coset.automaton)
    payload["representatives"] = {
        str(vertex): format_word(word) for vertex, word in sorted(coset.representatives.items())
    }
    return payload


def format_diagnostics(diagnostics: Iterable["Diagnostic"]) -> str:
    return "\n".join(str(diagnostic) for diagnostic in diagnostics)


def print_build_summary(outcome: "BuildOutcome", *, stream: TextIO | None = None) -> None:
    """Print a short summary of a build to ``stream`` (stderr by default)."""

    output = stream if stream is not None else sys.stderr
    lifted = outcome.lifted
    counts = _cell_counts(outcome)
    shape = ", ".join(f"{count} {dimension}-cells" for dimension, count in counts)
    print(f"Built '{lifted.complex.name}': {shape}; base vertex {lifted.base_vertex}.", file=output)
    verdict = "immersion" if not outcome.diagnostics else f"{len(outcome.diagnostics)} immersion problems"
    print(f"Map into '{lifted.immersion.target.name}': {verdict}; covering: {_yes_no(outcome.covering)}.", file=output)


def build_markdown_report(outcome: "BuildOutcome", *, template: Template | None = None) -> str:
    template = template or DEFAULT_TEMPLATE.template
    lifted = outcome.lifted
    generators = ", ".join(f"`{format_word(word)}`" for word in outcome.generators) or "_(none)_"
    summary = "\n".join(
        [
            f"- **Ambient complex:** {outcome.ambient_path} (`{lifted.immersion.target.name}`)",
            f"- **Base vertex:** `{outcome.base_vertex}` ↦ built vertex `{lifted.base_vertex}`",
            f"- **Generators:** {generators}",
            f"- **Closure rounds:** {lifted.coset.rounds}",
            f"- **Immersion:** {'yes' if not outcome.diagnostics else 'no'}",
            f"- **Covering:** {_yes_no(outcome.covering)}",
        ]
    )
    rows = [f"| {dimension} | {count} |" for dimension, count in _cell_counts(outcome)]
    cell_table = "\n".join(["| Dimension | Cells |", "| --- | --- |", *rows])
    representatives = "\n".join(
        f"- `v{vertex}`: `{format_word(word)}`" for vertex, word in sorted(lifted.coset.representatives.items())
    )
    diagnostics = "\n".join(f"- {diagnostic}" for diagnostic in outcome.diagnostics) or "- No problems were found."
    return template.substitute(
        summary=summary,
        cell_table=cell_table,
        representatives=representatives,
        diagnostics=diagnostics,
        timestamp=outcome.started_at.astimezone(timezone.utc).isoformat(),
        duration=_format_duration(outcome.duration),
    )


def write_markdown_report(outcome: "BuildOutcome", path: Path, *, template: Template | None = None) -> Path:
    target = Path(path).expanduser().resolve()
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(build_markdown_report(outcome, template=template), encoding="utf-8")
    return target


# ---------------------------------------------------------------------------
# Helper formatting utilities
# ---------------------------------------------------------------------------

def _cell_counts(outcome: "BuildOutcome") -> Sequence[tuple[int, int]]:
    counts: Dict[int, int] = {}
    for cell in outcome.lifted.complex.cells:
        counts[cell.dimension] = counts.get(cell.dimension, 0) + 1
    return sorted(counts.items())


def _yes_no(flag: bool | None) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def _format_duration(duration: "timedelta") -> str:
    total_seconds = duration.total_seconds()
    if total_seconds < 1:
        return f"{total_seconds * 1000:.0f} ms"
    return f"{total_seconds:.2f} s"


__all__ = [
    "ReportTemplate",
    "automaton_to_dict",
    "automaton_to_dot",
    "build_markdown_report",
    "coset_to_dict",
    "format_diagnostics",
    "print_build_summary",
    "write_markdown_report",
]
