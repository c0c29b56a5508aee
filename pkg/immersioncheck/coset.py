"""Coset automata of closed inverse submonoids and the complexes they define.

A submonoid is given by generator words that stabilise a base vertex of an
ambient complex.  Its coset automaton is the fold/expand closure of the
flower automaton of the generators; lifting the cell loops of that automaton
along the ambient complex yields an immersed complex whose loop monoid at
the base is the submonoid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .automata import InverseAutomaton, accepts, birooted_isomorphic, breadth_first_words, flower_automaton, run_from
from .complex import Cell, DeltaComplex, act, induced_base, leading_edge
from .errors import AmbiguousCellError, InvalidInputError, LiftFailureError, NotInLoopMonoidError, UnknownVertexError
from .immersion import CellMap
from .monoid import ClosureConfig, close_automaton, relations
from .words import Letter, Word, format_word


@dataclass(frozen=True)
class SubmonoidSpec:
    ambient: DeltaComplex
    base_vertex: str
    generators: Tuple[Word, ...]


@dataclass(frozen=True)
class CosetAutomaton:
    """Coset graph rooted at the submonoid itself, with shortlex representatives."""

    automaton: InverseAutomaton
    representatives: Mapping[int, Word]
    rounds: int

    @property
    def base(self) -> int:
        return self.automaton.start


@dataclass(frozen=True)
class LiftedComplex:
    """The complex of a submonoid, its immersion into the ambient and its base vertex."""

    complex: DeltaComplex
    immersion: CellMap
    base_vertex: str
    coset: CosetAutomaton


def check_spec(spec: SubmonoidSpec) -> None:
    ambient = spec.ambient
    if spec.base_vertex not in ambient or ambient.cell(spec.base_vertex).dimension != 0:
        raise UnknownVertexError(f"Vertex '{spec.base_vertex}' is not part of complex '{ambient.name}'.")
    for generator in spec.generators:
        if act(ambient, spec.base_vertex, generator) != spec.base_vertex:
            raise NotInLoopMonoidError(
                f"Generator '{format_word(generator)}' does not fix '{spec.base_vertex}' in '{ambient.name}'."
            )


def coset_automaton(spec: SubmonoidSpec, config: ClosureConfig | None = None) -> CosetAutomaton:
    check_spec(spec)
    presentation = relations(induced_base(spec.ambient))
    seed = flower_automaton(spec.generators, presentation.alphabet)
    closed = close_automaton(presentation, seed, config)
    return CosetAutomaton(closed.automaton, breadth_first_words(closed.automaton), closed.rounds)


def contains(coset: CosetAutomaton, word: Word) -> bool:
    return accepts(coset.automaton, word)


def vertex_images(spec: SubmonoidSpec, coset: CosetAutomaton) -> Dict[int, str]:
    """Vertex part of the immersion: the base goes to the base vertex, edges are followed."""

    automaton = coset.automaton
    images: Dict[int, str] = {coset.base: spec.base_vertex}
    queue = deque([coset.base])
    while queue:
        current = queue.popleft()
        for letter in automaton.alphabet.letters():
            target = automaton.step(current, letter)
            if target is None:
                continue
            reached = act(spec.ambient, images[current], Word((letter,)))
            if reached is None:
                raise LiftFailureError(f"Letter '{letter}' at coset vertex {current} has no lift at '{images[current]}'.")
            known = images.get(target)
            if known is None:
                images[target] = reached
                queue.append(target)
            elif known != reached:
                raise LiftFailureError(f"Coset vertex {target} lifts to both '{known}' and '{reached}'.")
    return images


def conjugate_generators(generators: Tuple[Word, ...], conjugator: Word) -> Tuple[Word, ...]:
    """Generators of the closure of ``m⁻¹Hm``: ``m⁻¹gm`` for every ``g`` plus ``m⁻¹m``."""

    inverse = conjugator.inverse()
    return tuple(inverse + generator + conjugator for generator in generators) + (inverse + conjugator,)


def are_conjugate(
    first: SubmonoidSpec, second: SubmonoidSpec, config: ClosureConfig | None = None
) -> Optional[Word]:
    """A word ``m`` fixing the base vertex that carries the first coset graph onto the second."""

    if first.ambient != second.ambient or first.base_vertex != second.base_vertex:
        raise InvalidInputError("Conjugacy is only defined for submonoids of the same loop monoid.")
    left = coset_automaton(first, config)
    right = coset_automaton(second, config)
    images = vertex_images(first, left)
    for candidate in left.automaton.vertices:
        if images[candidate] != first.base_vertex:
            continue
        rerooted = left.automaton.with_roots(candidate, candidate)
        if birooted_isomorphic(rerooted, right.automaton):
            return left.representatives[candidate]
    return None


def _ambient_cell(ambient: DeltaComplex, dimension: int, label: str, at: str) -> str:
    found = ambient.located.get((dimension, label, 0, at), ())
    if not found:
        raise LiftFailureError(f"No {dimension}-cell labelled '{label}' is rooted at '{at}' in '{ambient.name}'.")
    if len(found) > 1:
        raise AmbiguousCellError(f"Cells {', '.join(found)} of '{ambient.name}' share root '{at}' and label '{label}'.")
    return found[0]


def build_complex(spec: SubmonoidSpec, config: ClosureConfig | None = None) -> LiftedComplex:
    """Lift the coset graph of ``spec`` to an immersed complex, dimension by dimension."""

    ambient = spec.ambient
    coset = coset_automaton(spec, config)
    automaton = coset.automaton
    images = vertex_images(spec, coset)

    def vertex_id(node: int) -> str:
        return f"v{node}"

    cells: List[Cell] = [Cell(vertex_id(node), 0) for node in automaton.vertices]
    assignment: Dict[str, str] = {vertex_id(node): images[node] for node in automaton.vertices}
    rooted: Dict[Tuple[int, str, int], str] = {}
    x_letters = set(automaton.alphabet.x_letters)
    edges = [edge for edge in automaton.edges if edge.label in x_letters]
    for serial, edge in enumerate(edges):
        cell_id = f"e{serial}"
        cells.append(Cell(cell_id, 1, (vertex_id(edge.target), vertex_id(edge.source)), edge.label))
        rooted[(1, edge.label, edge.source)] = cell_id
        assignment[cell_id] = _ambient_cell(ambient, 1, edge.label, images[edge.source])
    loops = automaton.cell_loops()
    for dimension in range(2, ambient.top_dimension + 1):
        serial = 0
        for node, label in loops:
            if automaton.alphabet.p_letters[label] != dimension:
                continue
            target = ambient.cell(_ambient_cell(ambient, dimension, label, images[node]))
            faces: List[str] = []
            for index, face in enumerate(target.faces):
                anchor = node
                if index == 0:
                    step = ambient.cell(leading_edge(ambient, target.id)).label or ""
                    anchor_or_none = run_from(automaton, node, Word((Letter(step),)))
                    if anchor_or_none is None:
                        raise LiftFailureError(f"Coset vertex {node} has no '{step}'-edge for face d0 of '{label}'.")
                    anchor = anchor_or_none
                face_label = ambient.cell(face).label or ""
                lifted = rooted.get((dimension - 1, face_label, anchor))
                if lifted is None:
                    raise LiftFailureError(
                        f"No {dimension - 1}-cell labelled '{face_label}' is rooted at '{vertex_id(anchor)}' for face d{index} of '{label}'."
                    )
                faces.append(lifted)
            cell_id = f"c{dimension}_{serial}"
            serial += 1
            cells.append(Cell(cell_id, dimension, tuple(faces), label))
            rooted[(dimension, label, node)] = cell_id
            assignment[cell_id] = target.id
    top = max(cell.dimension for cell in cells)
    built = DeltaComplex(f"{ambient.name}_H", top, tuple(cells))
    return LiftedComplex(built, CellMap(built, ambient, assignment), vertex_id(coset.base), coset)


__all__ = [
    "CosetAutomaton",
    "LiftedComplex",
    "SubmonoidSpec",
    "are_conjugate",
    "build_complex",
    "check_spec",
    "conjugate_generators",
    "contains",
    "coset_automaton",
    "vertex_images",
]
