"""Checks on cell labels: consistency with a base and determinism at vertices."""

from __future__ import annotations

from typing import List, Tuple

from ..complex import BaseComplex, DeltaComplex, induced_base
from ..errors import InvalidComplexError
from .base import Diagnostic
from .structural import _BaseCheck


def determinism_diagnostics(complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
    """At most one ``k``-cell per label has a given simplex vertex at a given 0-cell."""

    found: List[Diagnostic] = []
    for (dimension, label, index, at), cells in complex_.located.items():
        if len(cells) > 1:
            found.append(
                Diagnostic(
                    "E_LABEL_DETERMINISM",
                    f"{len(cells)} {dimension}-cells labelled '{label}' have vertex {index} at '{at}'.",
                    (at,) + cells,
                )
            )
    return tuple(found)


def labeling_diagnostics(complex_: DeltaComplex, base: BaseComplex) -> Tuple[Diagnostic, ...]:
    """Violations of ``complex_`` being labelled over ``base``."""

    found: List[Diagnostic] = []
    base_complex = base.complex
    for cell in complex_.cells:
        if cell.dimension == 0:
            continue
        if cell.label is None:
            found.append(Diagnostic("E_PARTIAL_LABELING", f"Cell '{cell.id}' is unlabeled.", (cell.id,)))
            continue
        if cell.label not in base_complex or base_complex.cell(cell.label).dimension == 0:
            found.append(
                Diagnostic("E_UNKNOWN_LABEL", f"Label '{cell.label}' of '{cell.id}' is not a base cell.", (cell.id,))
            )
            continue
        target = base_complex.cell(cell.label)
        if target.dimension != cell.dimension:
            found.append(
                Diagnostic(
                    "E_LABEL_DIMENSION",
                    f"{cell.dimension}-cell '{cell.id}' carries the {target.dimension}-dimensional label '{cell.label}'.",
                    (cell.id,),
                )
            )
            continue
        if cell.dimension >= 2:
            face_labels = tuple(complex_.cell(face).label for face in cell.faces)
            if face_labels != target.faces:
                found.append(
                    Diagnostic(
                        "E_LABEL_FACE",
                        f"Face labels of '{cell.id}' are {list(face_labels)}, base cell '{cell.label}' has {list(target.faces)}.",
                        (cell.id,),
                    )
                )
    return tuple(found) + determinism_diagnostics(complex_)


class LabelConsistencyCheck(_BaseCheck):
    """Labels are either absent everywhere or describe a base complex."""

    def __init__(self) -> None:
        super().__init__(name="label-consistency")

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        positive = [cell for cell in complex_.cells if cell.dimension > 0]
        labeled = [cell for cell in positive if cell.label is not None]
        if not labeled:
            return ()
        if len(labeled) != len(positive):
            return tuple(
                Diagnostic("E_PARTIAL_LABELING", f"Cell '{cell.id}' is unlabeled.", (cell.id,))
                for cell in positive
                if cell.label is None
            )
        try:
            induced_base(complex_)
        except InvalidComplexError as exc:
            return exc.diagnostics
        return ()


class LabelDeterminismCheck(_BaseCheck):
    def __init__(self) -> None:
        super().__init__(name="label-determinism")

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        return determinism_diagnostics(complex_)


__all__ = [
    "LabelConsistencyCheck",
    "LabelDeterminismCheck",
    "determinism_diagnostics",
    "labeling_diagnostics",
]
