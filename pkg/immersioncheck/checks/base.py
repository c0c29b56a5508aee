"""Common interfaces and data structures for complex checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Protocol, Tuple

if TYPE_CHECKING:  # pragma: no cover - typing only
    from ..complex import DeltaComplex


@dataclass(frozen=True)
class Diagnostic:
    """One violated condition together with the offending cell ids."""

    code: str
    message: str
    cells: Tuple[str, ...] = ()

    def __str__(self) -> str:
        suffix = f" [{', '.join(self.cells)}]" if self.cells else ""
        return f"{self.code}: {self.message}{suffix}"


class ComplexCheck(Protocol):
    """Protocol implemented by every validation check.

    Structural checks run first; the remaining checks assume the face
    table is well formed and are skipped when a structural check fails.
    """

    name: str
    structural: bool

    def run(self, complex_: "DeltaComplex") -> Tuple[Diagnostic, ...]:
        """Return the violations found in ``complex_``."""
