"""Checks on the shape of the face table and the Δ-complex identities."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

import networkx as nx

from ..complex import DeltaComplex, root, vertex
from ..words import NAME_PATTERN
from .base import ComplexCheck, Diagnostic


@dataclass
class _BaseCheck(ComplexCheck):
    name: str
    structural: bool = False

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:  # pragma: no cover - abstract
        raise NotImplementedError


class IdentifierCheck(_BaseCheck):
    def __init__(self) -> None:
        super().__init__(name="identifiers", structural=True)

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        found: List[Diagnostic] = []
        for cell in complex_.cells:
            if not NAME_PATTERN.fullmatch(cell.id):
                found.append(Diagnostic("E_BAD_ID", f"Cell id {cell.id!r} is not an identifier.", (cell.id,)))
            if cell.label is not None and not NAME_PATTERN.fullmatch(cell.label):
                found.append(Diagnostic("E_BAD_ID", f"Label {cell.label!r} is not an identifier.", (cell.id,)))
        counts = Counter(cell.id for cell in complex_.cells)
        for cell_id, count in counts.items():
            if count > 1:
                found.append(Diagnostic("E_DUPLICATE_ID", f"Cell id '{cell_id}' is used {count} times.", (cell_id,)))
        return tuple(found)


class DimensionCheck(_BaseCheck):
    def __init__(self) -> None:
        super().__init__(name="dimensions", structural=True)

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        found: List[Diagnostic] = []
        if complex_.dimension < 0:
            found.append(Diagnostic("E_DIMENSION", f"Complex dimension {complex_.dimension} is negative."))
        for cell in complex_.cells:
            if not 0 <= cell.dimension <= complex_.dimension:
                found.append(
                    Diagnostic(
                        "E_DIMENSION",
                        f"Cell '{cell.id}' has dimension {cell.dimension} outside 0..{complex_.dimension}.",
                        (cell.id,),
                    )
                )
        return tuple(found)


class FaceTableCheck(_BaseCheck):
    """Arity, existence and dimension of every listed face."""

    def __init__(self) -> None:
        super().__init__(name="faces", structural=True)

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        found: List[Diagnostic] = []
        for cell in complex_.cells:
            expected = cell.dimension + 1 if cell.dimension > 0 else 0
            if len(cell.faces) != expected:
                found.append(
                    Diagnostic(
                        "E_FACE_ARITY",
                        f"{cell.dimension}-cell '{cell.id}' lists {len(cell.faces)} faces, expected {expected}.",
                        (cell.id,),
                    )
                )
                continue
            for face in cell.faces:
                if face not in complex_:
                    found.append(Diagnostic("E_UNKNOWN_FACE", f"Cell '{cell.id}' names unknown face '{face}'.", (cell.id, face)))
                elif complex_.cell(face).dimension != cell.dimension - 1:
                    found.append(
                        Diagnostic(
                            "E_FACE_DIMENSION",
                            f"Face '{face}' of {cell.dimension}-cell '{cell.id}' has dimension {complex_.cell(face).dimension}.",
                            (cell.id, face),
                        )
                    )
        return tuple(found)


class FaceIdentityCheck(_BaseCheck):
    """``d_i(d_j(C)) = d_{j-1}(d_i(C))`` for ``i < j``."""

    def __init__(self) -> None:
        super().__init__(name="face-identities")

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        found: List[Diagnostic] = []
        for cell in complex_.cells:
            if cell.dimension < 2:
                continue
            for i, j in combinations(range(cell.dimension + 1), 2):
                left = complex_.face(cell.faces[j], i)
                right = complex_.face(cell.faces[i], j - 1)
                if left != right:
                    found.append(
                        Diagnostic(
                            "E_FACE_IDENTITY",
                            f"Cell '{cell.id}': d{i}(d{j}) = '{left}' but d{j - 1}(d{i}) = '{right}'.",
                            (cell.id, left, right),
                        )
                    )
        return tuple(found)


class RootCoherenceCheck(_BaseCheck):
    def __init__(self) -> None:
        super().__init__(name="root-coherence")

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        found: List[Diagnostic] = []
        for cell in complex_.cells:
            if cell.dimension < 2:
                continue
            cell_root = root(complex_, cell.id)
            for index, face in enumerate(cell.faces):
                expected = vertex(complex_, cell.id, 1) if index == 0 else cell_root
                if root(complex_, face) != expected:
                    found.append(
                        Diagnostic(
                            "E_ROOT_COHERENCE",
                            f"Face d{index} of '{cell.id}' is rooted at '{root(complex_, face)}', expected '{expected}'.",
                            (cell.id, face),
                        )
                    )
        return tuple(found)


class ConnectivityCheck(_BaseCheck):
    def __init__(self) -> None:
        super().__init__(name="connectivity")

    def run(self, complex_: DeltaComplex) -> Tuple[Diagnostic, ...]:
        vertices = complex_.vertex_ids
        if not vertices:
            return (Diagnostic("E_DISCONNECTED", f"Complex '{complex_.name}' has no vertices."),)
        skeleton = nx.Graph()
        skeleton.add_nodes_from(vertices)
        skeleton.add_edges_from(complex_.simplex_vertices(edge.id) for edge in complex_.cells_of(1))
        if nx.is_connected(skeleton):
            return ()
        components = sorted(nx.connected_components(skeleton), key=lambda part: min(part))
        witnesses = tuple(min(part) for part in components)
        return (
            Diagnostic(
                "E_DISCONNECTED",
                f"The 1-skeleton of '{complex_.name}' has {len(components)} components.",
                witnesses,
            ),
        )


__all__ = [
    "ConnectivityCheck",
    "DimensionCheck",
    "FaceIdentityCheck",
    "FaceTableCheck",
    "IdentifierCheck",
    "RootCoherenceCheck",
]
