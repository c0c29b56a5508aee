"""Cell maps between labelled complexes, immersions and coverings."""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Tuple

from .checks.base import Diagnostic
from .complex import DeltaComplex, act, root, vertex
from .errors import InvalidInputError, NoSuchMapError, NotAnImmersionError, UnknownVertexError
from .words import Letter, Word


@dataclass(frozen=True)
class CellMap:
    """Assignment of every source cell to a target cell.

    Cell ids are unique across dimensions, so the assignment is one flat
    mapping; :meth:`by_dimension` regroups it.
    """

    source: DeltaComplex
    target: DeltaComplex
    assignment: Mapping[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", MappingProxyType(dict(self.assignment)))

    def __call__(self, cell_id: str) -> str:
        try:
            return self.assignment[cell_id]
        except KeyError:
            raise NoSuchMapError(f"Cell '{cell_id}' of '{self.source.name}' has no image.") from None

    def by_dimension(self) -> Dict[int, Dict[str, str]]:
        grouped: Dict[int, Dict[str, str]] = defaultdict(dict)
        for cell in self.source.cells:
            if cell.id in self.assignment:
                grouped[cell.dimension][cell.id] = self.assignment[cell.id]
        return dict(sorted(grouped.items()))

    def is_bijective(self) -> bool:
        images = list(self.assignment.values())
        return (
            len(self.assignment) == len(self.source.cells)
            and len(set(images)) == len(images)
            and set(images) == {cell.id for cell in self.target.cells}
        )


def _require_vertex(c: DeltaComplex, vertex_id: str) -> None:
    if vertex_id not in c or c.cell(vertex_id).dimension != 0:
        raise UnknownVertexError(f"Vertex '{vertex_id}' is not part of complex '{c.name}'.")


def _single(candidates: Tuple[str, ...], what: str) -> str:
    if not candidates:
        raise NoSuchMapError(f"No target cell matches {what}.")
    if len(candidates) > 1:
        raise NoSuchMapError(f"Several target cells match {what}: {', '.join(candidates)}.")
    return candidates[0]


def infer_map(source: DeltaComplex, target: DeltaComplex, start: str, image: str) -> CellMap:
    """The unique label-preserving cell map sending ``start`` to ``image``."""

    _require_vertex(source, start)
    _require_vertex(target, image)
    assignment: Dict[str, str] = {start: image}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for cell_id, index in source.star[current]:
            cell = source.cell(cell_id)
            if cell.dimension != 1:
                continue
            what = f"edge '{cell_id}' (label '{cell.label}') at '{assignment[current]}'"
            edge_image = _single(target.located.get((1, cell.label or "", index, assignment[current]), ()), what)
            if assignment.setdefault(cell_id, edge_image) != edge_image:
                raise NoSuchMapError(f"Edge '{cell_id}' would need two different images.")
            other = vertex(source, cell_id, 1 - index)
            other_image = vertex(target, edge_image, 1 - index)
            known = assignment.get(other)
            if known is None:
                assignment[other] = other_image
                queue.append(other)
            elif known != other_image:
                raise NoSuchMapError(f"Vertex '{other}' would map to both '{known}' and '{other_image}'.")
    unreached = [vertex_id for vertex_id in source.vertex_ids if vertex_id not in assignment]
    if unreached:
        raise NoSuchMapError(f"Vertices {unreached} are not reachable from '{start}'.")
    for cell in sorted(source.cells, key=lambda item: item.dimension):
        if cell.dimension < 2:
            continue
        at = assignment[root(source, cell.id)]
        what = f"{cell.dimension}-cell '{cell.id}' (label '{cell.label}') rooted at '{at}'"
        assignment[cell.id] = _single(target.located.get((cell.dimension, cell.label or "", 0, at), ()), what)
    mapping = CellMap(source, target, assignment)
    broken = _face_diagnostics(mapping)
    if broken:
        raise NoSuchMapError(f"The label-matching extension does not commute with faces: {broken[0].message}")
    return mapping


def _face_diagnostics(mapping: CellMap) -> List[Diagnostic]:
    found: List[Diagnostic] = []
    for cell in mapping.source.cells:
        if cell.dimension == 0:
            continue
        image = mapping.target.cell(mapping.assignment[cell.id])
        for index, face in enumerate(cell.faces):
            if mapping.assignment.get(face) != image.faces[index]:
                found.append(
                    Diagnostic(
                        "E_MAP_FACE",
                        f"f(d{index} {cell.id}) = '{mapping.assignment.get(face)}' but d{index} f({cell.id}) = '{image.faces[index]}'.",
                        (cell.id, face),
                    )
                )
    return found


def check_immersion(mapping: CellMap) -> Tuple[Diagnostic, ...]:
    """Violations of ``mapping`` being a label-preserving, locally injective cell map."""

    source, target = mapping.source, mapping.target
    found: List[Diagnostic] = []
    for cell in source.cells:
        image_id = mapping.assignment.get(cell.id)
        if image_id is None:
            found.append(Diagnostic("E_MAP_TOTAL", f"Cell '{cell.id}' has no image.", (cell.id,)))
        elif image_id not in target:
            found.append(Diagnostic("E_MAP_UNKNOWN_TARGET", f"Image '{image_id}' of '{cell.id}' is not a target cell.", (cell.id,)))
        elif target.cell(image_id).dimension != cell.dimension:
            found.append(
                Diagnostic(
                    "E_MAP_DIMENSION",
                    f"{cell.dimension}-cell '{cell.id}' maps to {target.cell(image_id).dimension}-cell '{image_id}'.",
                    (cell.id, image_id),
                )
            )
    if found:
        return tuple(found)
    found.extend(_face_diagnostics(mapping))
    for cell in source.cells:
        image = target.cell(mapping.assignment[cell.id])
        if cell.dimension > 0 and cell.label != image.label:
            found.append(
                Diagnostic(
                    "E_MAP_LABEL",
                    f"'{cell.id}' is labelled '{cell.label}' but its image '{image.id}' is labelled '{image.label}'.",
                    (cell.id, image.id),
                )
            )
    for at, entries in source.star.items():
        counts: Counter[Tuple[int, str]] = Counter()
        for cell_id, index in entries:
            counts[(index, mapping.assignment[cell_id])] += 1
        for (index, image_id), count in sorted(counts.items()):
            if count > 1:
                clashing = tuple(cell_id for cell_id, position in entries if position == index and mapping.assignment[cell_id] == image_id)
                found.append(
                    Diagnostic(
                        "E_LOCAL_INJECTIVITY",
                        f"{count} cells with vertex {index} at '{at}' all map to '{image_id}'.",
                        (at,) + clashing,
                    )
                )
    return tuple(found)


def is_covering(mapping: CellMap) -> bool:
    """Star surjectivity of an immersion at every source vertex."""

    problems = check_immersion(mapping)
    if problems:
        raise NotAnImmersionError(f"Not an immersion: {problems[0]}")
    for at in mapping.source.vertex_ids:
        lifted = {(mapping.assignment[cell_id], index) for cell_id, index in mapping.source.star[at]}
        for entry in mapping.target.star[mapping.assignment[at]]:
            if entry not in lifted:
                return False
    return True


def complex_isomorphic(
    first: DeltaComplex, second: DeltaComplex, pinned: Optional[Tuple[str, str]] = None
) -> Optional[CellMap]:
    """A label-preserving isomorphism ``first → second``, optionally fixing a vertex pair."""

    shape = Counter(cell.dimension for cell in first.cells)
    if shape != Counter(cell.dimension for cell in second.cells) or not second.vertex_ids:
        return None
    if pinned is not None:
        candidates = [pinned]
    else:
        anchor = second.vertex_ids[0]
        candidates = [(vertex_id, anchor) for vertex_id in first.vertex_ids]
    for start, image in candidates:
        try:
            mapping = infer_map(first, second, start, image)
        except NoSuchMapError:
            continue
        if mapping.is_bijective():
            return mapping
    return None


def compose(after: CellMap, before: CellMap) -> CellMap:
    """``after ∘ before``."""

    assignment: Dict[str, str] = {}
    for cell_id, middle in before.assignment.items():
        if middle not in after.assignment:
            raise InvalidInputError(f"Cell '{middle}' of '{before.target.name}' is outside the domain of the second map.")
        assignment[cell_id] = after.assignment[middle]
    return CellMap(before.source, after.target, assignment)


def equivalent_immersions(first: CellMap, second: CellMap) -> Optional[CellMap]:
    """An isomorphism ``h`` with ``second ∘ h = first``, if one exists."""

    if not first.source.vertex_ids:
        return None
    anchor = first.source.vertex_ids[0]
    goal = first.assignment[anchor]
    for candidate in second.source.vertex_ids:
        if second.assignment[candidate] != goal:
            continue
        isomorphism = complex_isomorphic(first.source, second.source, pinned=(anchor, candidate))
        if isomorphism is None:
            continue
        if all(second.assignment[isomorphism.assignment[cell_id]] == image for cell_id, image in first.assignment.items()):
            return isomorphism
    return None


def loop_monoid_embedded(mapping: CellMap, start: str, max_length: int) -> bool:
    """Every loop at ``start`` of length ``<= max_length`` is a loop at its image."""

    image = mapping.assignment[start]
    letters: List[Letter] = list(mapping.target.alphabet.letters())
    stack: List[Tuple[str, Tuple[Letter, ...]]] = [(start, ())]
    while stack:
        current, word = stack.pop()
        if current == start and act(mapping.target, image, Word(word)) != image:
            return False
        if len(word) == max_length:
            continue
        for letter in letters:
            following = act(mapping.source, current, Word((letter,)))
            if following is not None:
                stack.append((following, word + (letter,)))
    return True


def cell_map_from_dict(source: DeltaComplex, target: DeltaComplex, data: Mapping[str, Mapping[str, str]]) -> CellMap:
    """Build a map from the ``{"0": {...}, "1": {...}}`` interchange format."""

    assignment: Dict[str, str] = {}
    for dimension, cells in data.items():
        if not str(dimension).isdigit() or not isinstance(cells, Mapping):
            raise InvalidInputError(f"Map key {dimension!r} must be a dimension with an object of cell ids.")
        for cell_id, image in cells.items():
            if not isinstance(image, str):
                raise InvalidInputError(f"Image of '{cell_id}' must be a cell id string.")
            assignment[str(cell_id)] = image
    return CellMap(source, target, assignment)


__all__ = [
    "CellMap",
    "cell_map_from_dict",
    "check_immersion",
    "complex_isomorphic",
    "compose",
    "equivalent_immersions",
    "infer_map",
    "is_covering",
    "loop_monoid_embedded",
]
