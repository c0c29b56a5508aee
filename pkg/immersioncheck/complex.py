"""Semi-simplicial encoding of Δ-complexes.

A ``k``-cell lists its faces ``[d_0, ..., d_k]`` where ``d_i`` is the
``(k-1)``-cell obtained by omitting simplex vertex ``v_i``.  Labels map cells
into a one-vertex base complex; a 1-cell label is an edge letter and a
``k``-cell label (``k >= 2``) is a cell letter of dimension ``k``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, replace
from functools import cached_property
from itertools import combinations
from types import MappingProxyType
from typing import TYPE_CHECKING, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DimensionTooLowError,
    IncompatibleBasesError,
    IndexOutOfRangeError,
    InvalidComplexError,
    UnknownVertexError,
)
from .words import Alphabet, Letter, Word

if TYPE_CHECKING:  # pragma: no cover - typing only
    from .checks.base import Diagnostic

BASE_VERTEX_ID = "b0"


@dataclass(frozen=True)
class Cell:
    """A single cell; 0-cells have no faces and no label."""

    id: str
    dimension: int
    faces: Tuple[str, ...] = ()
    label: Optional[str] = None


@dataclass(frozen=True)
class DeltaComplex:
    """Cells per dimension with ordered face lists and optional labels."""

    name: str
    dimension: int
    cells: Tuple[Cell, ...]

    @cached_property
    def _by_id(self) -> Mapping[str, Cell]:
        return {cell.id: cell for cell in self.cells}

    def __contains__(self, cell_id: object) -> bool:
        return cell_id in self._by_id

    def cell(self, cell_id: str) -> Cell:
        try:
            return self._by_id[cell_id]
        except KeyError:
            raise UnknownVertexError(f"Cell '{cell_id}' is not part of complex '{self.name}'.") from None

    def cells_of(self, dimension: int) -> Tuple[Cell, ...]:
        return self._by_dimension.get(dimension, ())

    @cached_property
    def _by_dimension(self) -> Mapping[int, Tuple[Cell, ...]]:
        grouped: Dict[int, List[Cell]] = defaultdict(list)
        for cell in self.cells:
            grouped[cell.dimension].append(cell)
        return {dimension: tuple(cells) for dimension, cells in grouped.items()}

    @property
    def vertex_ids(self) -> Tuple[str, ...]:
        return tuple(cell.id for cell in self.cells_of(0))

    @property
    def top_dimension(self) -> int:
        return max((cell.dimension for cell in self.cells), default=0)

    def face(self, cell_id: str, index: int) -> str:
        cell = self.cell(cell_id)
        if cell.dimension == 0:
            raise DimensionTooLowError(f"0-cell '{cell_id}' has no faces.")
        if not 0 <= index <= cell.dimension:
            raise IndexOutOfRangeError(f"Face index {index} is out of range for {cell.dimension}-cell '{cell_id}'.")
        return cell.faces[index]

    def label(self, cell_id: str) -> Optional[str]:
        return self.cell(cell_id).label

    def simplex_vertices(self, cell_id: str) -> Tuple[str, ...]:
        """Images of ``v_0, ..., v_k`` under the characteristic map of the cell."""

        known = self._simplex_vertices.get(cell_id)
        if known is not None:
            return known
        cell = self.cell(cell_id)
        if cell.dimension == 0:
            return (cell.id,)
        k = cell.dimension
        # v_i for i < k lives on d_k; v_k is the last vertex of d_0
        return self.simplex_vertices(cell.faces[k]) + (self.simplex_vertices(cell.faces[0])[k - 1],)

    @cached_property
    def _simplex_vertices(self) -> Mapping[str, Tuple[str, ...]]:
        """Vertex tuples of every well-formed cell, filled in dimension order."""

        table: Dict[str, Tuple[str, ...]] = {}
        for cell in sorted(self.cells, key=lambda item: item.dimension):
            k = cell.dimension
            if k == 0:
                table[cell.id] = (cell.id,)
                continue
            if len(cell.faces) != k + 1:
                continue
            last, first = table.get(cell.faces[k]), table.get(cell.faces[0])
            if last is None or first is None or len(last) != k or len(first) != k:
                continue
            table[cell.id] = last + (first[k - 1],)
        return MappingProxyType(table)

    @property
    def is_labeled(self) -> bool:
        positive = [cell for cell in self.cells if cell.dimension > 0]
        return bool(positive) and all(cell.label is not None for cell in positive)

    @cached_property
    def alphabet(self) -> Alphabet:
        """Letters used by the labels, in dimension then declaration order."""

        x_letters: List[str] = []
        p_letters: Dict[str, int] = {}
        for cell in sorted(self.cells, key=lambda item: item.dimension):
            if cell.label is None or cell.dimension == 0:
                continue
            if cell.dimension == 1:
                if cell.label not in x_letters:
                    x_letters.append(cell.label)
            else:
                p_letters.setdefault(cell.label, cell.dimension)
        return Alphabet(tuple(x_letters), p_letters)

    @cached_property
    def located(self) -> Mapping[Tuple[int, str, int, str], Tuple[str, ...]]:
        """``(k, label, i, vertex)`` → ids of ``k``-cells with that label and ``v_i`` at ``vertex``."""

        table: Dict[Tuple[int, str, int, str], List[str]] = defaultdict(list)
        for cell in self.cells:
            if cell.dimension == 0 or cell.label is None:
                continue
            for index, vertex in enumerate(self.simplex_vertices(cell.id)):
                table[(cell.dimension, cell.label, index, vertex)].append(cell.id)
        return {key: tuple(value) for key, value in table.items()}

    @cached_property
    def star(self) -> Mapping[str, Tuple[Tuple[str, int], ...]]:
        """Vertex → ``(cell id, index)`` pairs with ``vertex(cell, index) = vertex``."""

        table: Dict[str, List[Tuple[str, int]]] = {vertex: [] for vertex in self.vertex_ids}
        for cell in self.cells:
            if cell.dimension == 0:
                continue
            for index, vertex in enumerate(self.simplex_vertices(cell.id)):
                table.setdefault(vertex, []).append((cell.id, index))
        return {vertex: tuple(entries) for vertex, entries in table.items()}

    def relabeled(self, labels: Mapping[str, Optional[str]]) -> "DeltaComplex":
        cells = tuple(replace(cell, label=labels.get(cell.id, cell.label)) for cell in self.cells)
        return DeltaComplex(self.name, self.dimension, cells)


@dataclass(frozen=True)
class BaseComplex:
    """A one-vertex complex whose cell labels are the cell ids."""

    complex: DeltaComplex

    def __post_init__(self) -> None:
        vertices = self.complex.cells_of(0)
        if len(vertices) != 1:
            raise InvalidComplexError(
                f"A base complex needs exactly one 0-cell, '{self.complex.name}' has {len(vertices)}."
            )
        for cell in self.complex.cells:
            if cell.dimension > 0 and cell.label not in (None, cell.id):
                raise InvalidComplexError(f"Base cell '{cell.id}' carries label '{cell.label}'; base labels are ids.")
        if not self.complex.is_labeled and any(cell.dimension > 0 for cell in self.complex.cells):
            labels = {cell.id: cell.id for cell in self.complex.cells if cell.dimension > 0}
            object.__setattr__(self, "complex", self.complex.relabeled(labels))

    @property
    def name(self) -> str:
        return self.complex.name

    @property
    def vertex(self) -> str:
        return self.complex.vertex_ids[0]

    @cached_property
    def alphabet(self) -> Alphabet:
        x_letters = tuple(cell.id for cell in self.complex.cells_of(1))
        p_letters = {
            cell.id: cell.dimension for cell in self.complex.cells if cell.dimension >= 2
        }
        return Alphabet(x_letters, p_letters)

    def cell_letters(self) -> Tuple[str, ...]:
        return tuple(self.alphabet.p_letters)


def vertex(c: DeltaComplex, cell_id: str, index: int) -> str:
    """The 0-cell that is the image of simplex vertex ``v_index``."""

    cell = c.cell(cell_id)
    if not 0 <= index <= cell.dimension:
        raise IndexOutOfRangeError(f"Vertex index {index} is out of range for {cell.dimension}-cell '{cell_id}'.")
    return c.simplex_vertices(cell_id)[index]


def root(c: DeltaComplex, cell_id: str) -> str:
    return vertex(c, cell_id, 0)


def subface(c: DeltaComplex, cell_id: str, indices: Iterable[int]) -> str:
    """The face of ``cell_id`` spanned by the simplex vertices ``indices``."""

    cell = c.cell(cell_id)
    kept = set(indices)
    if not kept or any(not 0 <= index <= cell.dimension for index in kept):
        raise IndexOutOfRangeError(f"Indices {sorted(kept)} do not span a face of '{cell_id}'.")
    current = cell_id
    for removed in sorted(set(range(cell.dimension + 1)) - kept, reverse=True):
        current = c.face(current, removed)
    return current


def edge_of(c: DeltaComplex, cell_id: str, first: int, second: int) -> str:
    if first >= second:
        raise IndexOutOfRangeError(f"Edge indices must increase, got {first} and {second}.")
    return subface(c, cell_id, (first, second))


def leading_edge(c: DeltaComplex, cell_id: str) -> str:
    """``e(C) = d_2(d_3(...d_k(C)))``, the edge ``[v_0, v_1]``."""

    current = cell_id
    for index in range(c.cell(cell_id).dimension, 1, -1):
        current = c.face(current, index)
    return current


def _letter(c: DeltaComplex, cell_id: str) -> Letter:
    cell = c.cell(cell_id)
    if cell.label is None:
        raise InvalidComplexError(f"Cell '{cell_id}' of '{c.name}' is unlabeled.")
    return Letter(cell.label, False, cell.dimension >= 2)


def boundary_label(c: DeltaComplex, cell_id: str) -> Word:
    """Word read around the boundary of a cell of dimension two or more."""

    cell = c.cell(cell_id)
    k = cell.dimension
    if k < 2:
        raise DimensionTooLowError(f"Boundary labels need a cell of dimension >= 2; '{cell_id}' has dimension {k}.")
    faces = cell.faces
    if k == 2:
        letters = (_letter(c, faces[2]), _letter(c, faces[0]), _letter(c, faces[1]).inverse())
        return Word(letters)
    edge = _letter(c, leading_edge(c, cell_id))
    sides = tuple(_letter(c, faces[index]) for index in range(k, 0, -1))
    return Word(sides + (edge, _letter(c, faces[0]), edge.inverse()))


def _fresh_id(taken: Iterable[str], preferred: str = BASE_VERTEX_ID) -> str:
    used = set(taken)
    candidate = preferred
    serial = 0
    while candidate in used:
        serial += 1
        candidate = f"{preferred}_{serial}"
    return candidate


def canonical_labeling(c: DeltaComplex) -> Tuple[BaseComplex, DeltaComplex]:
    """Label every cell by its own id and collapse all vertices to one."""

    from .checks import run_checks, structural_checks

    problems = run_checks(c, structural_checks())
    if problems:
        raise InvalidComplexError(f"Complex '{c.name}' is structurally invalid.", problems)
    labels = {cell.id: cell.id for cell in c.cells if cell.dimension > 0}
    labeled = c.relabeled(labels)
    base_vertex = _fresh_id(labels)
    base_cells: List[Cell] = [Cell(base_vertex, 0)]
    for cell in labeled.cells:
        if cell.dimension == 1:
            base_cells.append(Cell(cell.id, 1, (base_vertex, base_vertex), cell.id))
        elif cell.dimension >= 2:
            base_cells.append(Cell(cell.id, cell.dimension, cell.faces, cell.id))
    base = BaseComplex(DeltaComplex(f"B({c.name})", c.dimension, tuple(base_cells)))
    return base, labeled


def induced_base(c: DeltaComplex) -> BaseComplex:
    """The base complex that the labels of ``c`` describe."""

    from .checks.base import Diagnostic

    faces: Dict[str, Tuple[str, ...]] = {}
    dimensions: Dict[str, int] = {}
    witnesses: Dict[str, str] = {}
    problems: List[Diagnostic] = []
    labels = [cell.label for cell in c.cells if cell.label is not None]
    base_vertex = _fresh_id(labels)
    for cell in sorted((cell for cell in c.cells if cell.dimension > 0), key=lambda item: item.dimension):
        if cell.label is None:
            problems.append(Diagnostic("E_PARTIAL_LABELING", f"Cell '{cell.id}' is unlabeled.", (cell.id,)))
            continue
        if cell.dimension == 1:
            face_labels: Tuple[str, ...] = (base_vertex, base_vertex)
        else:
            face_labels = tuple(c.cell(face).label or "" for face in cell.faces)
        known = dimensions.setdefault(cell.label, cell.dimension)
        if known != cell.dimension:
            problems.append(
                Diagnostic(
                    "E_LABEL_DIMENSION",
                    f"Label '{cell.label}' is used in dimensions {known} and {cell.dimension}.",
                    (witnesses[cell.label], cell.id),
                )
            )
            continue
        expected = faces.setdefault(cell.label, face_labels)
        witnesses.setdefault(cell.label, cell.id)
        if expected != face_labels:
            problems.append(
                Diagnostic(
                    "E_LABEL_FACE",
                    f"Cells labelled '{cell.label}' disagree about their face labels.",
                    (witnesses[cell.label], cell.id),
                )
            )
    if problems:
        raise InvalidComplexError(f"Labels of '{c.name}' do not describe a base complex.", problems)
    cells = [Cell(base_vertex, 0)] + [
        Cell(label, dimensions[label], faces[label], label) for label in faces
    ]
    return BaseComplex(DeltaComplex(f"B({c.name})", c.dimension, tuple(cells)))


def resolve_base(c: DeltaComplex) -> Tuple[BaseComplex, DeltaComplex]:
    """Return ``(base, labelled complex)``, inventing labels for unlabelled input."""

    if c.is_labeled:
        return induced_base(c), c
    return canonical_labeling(c)


def base_of(c: DeltaComplex) -> BaseComplex:
    """``c`` itself when it already is a base, otherwise the base its labels describe."""

    if len(c.vertex_ids) == 1 and all(cell.label in (None, cell.id) for cell in c.cells if cell.dimension > 0):
        return BaseComplex(c)
    base, _ = resolve_base(c)
    return base


def merge_bases(first: BaseComplex, second: BaseComplex) -> BaseComplex:
    """Union of two base complexes that agree on every shared label."""

    first.alphabet.merge(second.alphabet)
    cells: Dict[str, Cell] = {cell.id: cell for cell in first.complex.cells if cell.dimension > 0}
    for cell in second.complex.cells:
        if cell.dimension == 0:
            continue
        known = cells.get(cell.id)
        if known is None:
            cells[cell.id] = cell
        elif cell.dimension >= 2 and known.faces != cell.faces:
            raise IncompatibleBasesError(f"Bases disagree about the faces of '{cell.id}'.")
    base_vertex = first.vertex
    merged = [Cell(base_vertex, 0)]
    for cell in cells.values():
        faces = (base_vertex, base_vertex) if cell.dimension == 1 else cell.faces
        merged.append(Cell(cell.id, cell.dimension, faces, cell.id))
    dimension = max(first.complex.dimension, second.complex.dimension)
    return BaseComplex(DeltaComplex(first.name, dimension, tuple(merged)))


def standard_simplex(n: int, name: str | None = None) -> DeltaComplex:
    """The Δ-complex Δⁿ with one cell per non-empty vertex subset."""

    if n < 0:
        raise IndexOutOfRangeError("The standard simplex needs n >= 0.")
    separator = "" if n < 10 else "_"
    prefixes = {0: "v", 1: "e", 2: "t", 3: "s"}

    def cell_id(subset: Sequence[int]) -> str:
        k = len(subset) - 1
        prefix = prefixes.get(k, f"c{k}_")
        return prefix + separator.join(str(index) for index in subset)

    cells: List[Cell] = []
    for size in range(1, n + 2):
        for subset in combinations(range(n + 1), size):
            faces = tuple(cell_id(subset[:i] + subset[i + 1 :]) for i in range(size)) if size > 1 else ()
            cells.append(Cell(cell_id(subset), size - 1, faces))
    return DeltaComplex(name or f"simplex{n}", n, tuple(cells))


def act(c: DeltaComplex, start: str, word: Word) -> Optional[str]:
    """Partial action of ``word`` on the vertex ``start``; ``None`` when undefined."""

    if start not in c or c.cell(start).dimension != 0:
        raise UnknownVertexError(f"Vertex '{start}' is not part of complex '{c.name}'.")
    located = c.located
    current = start
    for letter in word:
        if letter.cell:
            dimension = c.alphabet.p_letters.get(letter.name)
            if dimension is None or not located.get((dimension, letter.name, 0, current)):
                return None
            continue
        index = 1 if letter.inverted else 0
        edges = located.get((1, letter.name, index, current))
        if not edges:
            return None
        current = vertex(c, edges[0], 1 - index)
    return current


def loop_contains(c: DeltaComplex, start: str, word: Word) -> bool:
    return act(c, start, word) == start


def validate(c: DeltaComplex) -> Tuple["Diagnostic", ...]:
    """Run the default checks; an empty result means ``c`` is valid."""

    from .checks import run_checks

    return run_checks(c)


def check_labeling(c: DeltaComplex, base: BaseComplex) -> Tuple["Diagnostic", ...]:
    from .checks.labeling import labeling_diagnostics

    return labeling_diagnostics(c, base)


def require_valid(c: DeltaComplex) -> DeltaComplex:
    problems = validate(c)
    if problems:
        raise InvalidComplexError(f"Complex '{c.name}' is invalid: {problems[0].message}", problems)
    return c


def boundary_paths(c: DeltaComplex, cell_id: str, length: int) -> Tuple[Word, ...]:
    """Labels of closed walks around ``v_0`` on the 1-skeleton of the cell, up to ``length`` steps."""

    return _closed_walks(c, cell_id, length, generalized=False)


def generalized_boundary_paths(c: DeltaComplex, cell_id: str, length: int) -> Tuple[Word, ...]:
    """As :func:`boundary_paths` but a step may also read a proper face label at its root."""

    return _closed_walks(c, cell_id, length, generalized=True)


def _closed_walks(c: DeltaComplex, cell_id: str, length: int, *, generalized: bool) -> Tuple[Word, ...]:
    k = c.cell(cell_id).dimension
    if k < 2:
        raise DimensionTooLowError(f"'{cell_id}' has dimension {k}; closed walks need dimension >= 2.")
    steps: Dict[int, List[Tuple[Letter, int]]] = {index: [] for index in range(k + 1)}
    for first, second in combinations(range(k + 1), 2):
        letter = _letter(c, edge_of(c, cell_id, first, second))
        steps[first].append((letter, second))
        steps[second].append((letter.inverse(), first))
    if generalized:
        for size in range(3, k + 1):
            for subset in combinations(range(k + 1), size):
                steps[subset[0]].append((_letter(c, subface(c, cell_id, subset)), subset[0]))
    found: Dict[Word, None] = {Word(): None}
    frontier: List[Tuple[int, Tuple[Letter, ...]]] = [(0, ())]
    for _ in range(length):
        following: List[Tuple[int, Tuple[Letter, ...]]] = []
        for position, letters in frontier:
            for letter, target in steps[position]:
                walk = letters + (letter,)
                following.append((target, walk))
                if target == 0:
                    found.setdefault(Word(walk), None)
        frontier = following
    return tuple(found)


__all__ = [
    "BaseComplex",
    "Cell",
    "DeltaComplex",
    "act",
    "base_of",
    "boundary_label",
    "boundary_paths",
    "canonical_labeling",
    "check_labeling",
    "edge_of",
    "generalized_boundary_paths",
    "induced_base",
    "leading_edge",
    "loop_contains",
    "merge_bases",
    "require_valid",
    "resolve_base",
    "root",
    "standard_simplex",
    "subface",
    "validate",
    "vertex",
]
