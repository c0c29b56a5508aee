"""Birooted inverse automata over ``X ∪ P``.

An automaton stores each positive ``x``-edge once; the inverse edge labelled
``x'`` is implied.  Cell letters are self-inverse, so a ``ρ``-edge is stored
once as an undirected edge ``(min, ρ, max)`` and can be walked both ways.

Folding is Stallings-style: vertices are identified with a union-find forest
until every vertex has at most one out-edge per letter (for the involutive
closure that also means at most one in-edge per letter).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import NotFoldedError, UnknownVertexError
from .unionfind import UnionFind
from .words import Alphabet, Letter, Word


class Edge(NamedTuple):
    """Stored edge; ``label`` is a positive letter name."""

    source: int
    label: str
    target: int


@dataclass(frozen=True)
class InverseAutomaton:
    """Birooted edge-labelled graph ``(start, Γ, end)``."""

    alphabet: Alphabet
    vertices: Tuple[int, ...]
    edges: Tuple[Edge, ...]
    start: int
    end: int

    @cached_property
    def moves(self) -> Mapping[int, Mapping[Letter, Tuple[int, ...]]]:
        """Outgoing transitions per vertex, inverse and cell letters included."""

        table: Dict[int, Dict[Letter, List[int]]] = {vertex: {} for vertex in self.vertices}
        for edge in self.edges:
            letter = self._positive_letter(edge.label)
            table[edge.source].setdefault(letter, []).append(edge.target)
            if letter.cell:
                if edge.source != edge.target:
                    table[edge.target].setdefault(letter, []).append(edge.source)
            else:
                table[edge.target].setdefault(letter.inverse(), []).append(edge.source)
        return {
            vertex: {letter: tuple(dict.fromkeys(targets)) for letter, targets in letters.items()}
            for vertex, letters in table.items()
        }

    def _positive_letter(self, label: str) -> Letter:
        return Letter(label, False, label in self.alphabet.p_letters)

    def step(self, vertex: int, letter: Letter) -> Optional[int]:
        targets = self.moves.get(vertex, {}).get(letter, ())
        if not targets:
            return None
        if len(targets) > 1:
            raise NotFoldedError(f"Vertex {vertex} has several {letter}-edges; fold the automaton first.")
        return targets[0]

    def is_deterministic(self) -> bool:
        return all(len(targets) <= 1 for letters in self.moves.values() for targets in letters.values())

    def is_connected(self) -> bool:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((edge.source, edge.target) for edge in self.edges)
        return nx.is_connected(graph)

    def with_roots(self, start: int, end: int) -> "InverseAutomaton":
        for vertex in (start, end):
            if vertex not in self.moves:
                raise UnknownVertexError(f"Vertex {vertex} is not part of the automaton.")
        return InverseAutomaton(self.alphabet, self.vertices, self.edges, start, end)

    def cell_loops(self) -> Tuple[Tuple[int, str], ...]:
        return tuple(
            (edge.source, edge.label)
            for edge in self.edges
            if edge.label in self.alphabet.p_letters and edge.source == edge.target
        )

    def signature(self) -> Tuple[int, int, int, Tuple[Edge, ...]]:
        """Comparable key; equal for canonically numbered isomorphic automata."""

        return len(self.vertices), self.start, self.end, self.edges


class AutomatonBuilder:
    """Mutable scratch graph used while sewing and folding.

    Vertex ids may be any hashable value; :meth:`to_automaton` renumbers them.
    """

    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet
        self._adjacency: Dict[Hashable, Dict[Letter, Set[Hashable]]] = {}
        self._classes: UnionFind[Hashable] = UnionFind()

    @classmethod
    def from_automaton(
        cls, automaton: InverseAutomaton, rename: Callable[[int], Hashable] = lambda vertex: vertex
    ) -> "AutomatonBuilder":
        builder = cls(automaton.alphabet)
        for vertex in automaton.vertices:
            builder.add_vertex(rename(vertex))
        for edge in automaton.edges:
            builder.add_edge(rename(edge.source), automaton._positive_letter(edge.label), rename(edge.target))
        return builder

    def __contains__(self, vertex: Hashable) -> bool:
        return self.find(vertex) in self._adjacency

    def vertices(self) -> Tuple[Hashable, ...]:
        return tuple(self._adjacency)

    def find(self, vertex: Hashable) -> Hashable:
        return self._classes.find(vertex)

    def add_vertex(self, vertex: Hashable) -> Hashable:
        self._adjacency.setdefault(vertex, {})
        return vertex

    def add_edge(self, source: Hashable, letter: Letter, target: Hashable) -> None:
        source, target = self.find(source), self.find(target)
        self._adjacency[source].setdefault(letter, set()).add(target)
        self._adjacency[target].setdefault(letter.inverse(), set()).add(source)

    def add_path(self, source: Hashable, word: Word, target: Hashable, fresh: Callable[[], Hashable]) -> None:
        """Sew a new path spelling ``word`` from ``source`` to ``target``."""

        if not word:
            self.merge(source, target)
            return
        current = source
        for letter in word.letters[:-1]:
            following = self.add_vertex(fresh())
            self.add_edge(current, letter, following)
            current = following
        self.add_edge(current, word.letters[-1], target)

    def targets(self, vertex: Hashable, letter: Letter) -> Set[Hashable]:
        vertex = self.find(vertex)
        return {self.find(target) for target in self._adjacency[vertex].get(letter, ())}

    def step(self, vertex: Hashable, letter: Letter) -> Optional[Hashable]:
        targets = self.targets(vertex, letter)
        if not targets:
            return None
        if len(targets) > 1:
            raise NotFoldedError(f"Vertex {vertex!r} has several {letter}-edges; fold first.")
        return next(iter(targets))

    def run(self, vertex: Hashable, word: Word) -> Optional[Hashable]:
        current: Optional[Hashable] = self.find(vertex)
        for letter in word:
            current = self.step(current, letter)
            if current is None:
                return None
        return current

    def merge(self, first: Hashable, second: Hashable) -> Hashable:
        root_a, root_b = self.find(first), self.find(second)
        if root_a == root_b:
            return root_a
        root = self._classes.union(root_a, root_b)
        absorbed = root_b if root == root_a else root_a
        moves = self._adjacency[root]
        for letter, targets in self._adjacency.pop(absorbed).items():
            moves.setdefault(letter, set()).update(targets)
        return root

    def fold(self) -> int:
        """Identify vertices until the graph is deterministic; return the merge count."""

        merges = 0
        pending = deque(self._adjacency)
        while pending:
            vertex = self.find(pending.popleft())
            moves = self._adjacency[vertex]
            for letter in list(moves):
                roots = {self.find(target) for target in moves[letter]}
                if len(roots) > 1:
                    survivor = roots.pop()
                    for other in roots:
                        survivor = self.merge(survivor, other)
                        merges += 1
                    pending.append(survivor)
                    pending.append(vertex)
                    break
                moves[letter] = roots
        for vertex, moves in self._adjacency.items():
            for letter in moves:
                moves[letter] = {self.find(target) for target in moves[letter]}
        return merges

    def to_automaton(self, start: Hashable, end: Hashable, *, canonical: bool = True) -> InverseAutomaton:
        """Freeze the builder into an :class:`InverseAutomaton`.

        With ``canonical`` the vertices are numbered in breadth-first discovery
        order from ``start`` exploring letters in alphabet order; otherwise in
        insertion order.
        """

        start, end = self.find(start), self.find(end)
        if canonical:
            order = self._breadth_first(start)
            reached = set(order)
            order.extend(vertex for vertex in self._adjacency if vertex not in reached)
        else:
            order = list(self._adjacency)
        numbering = {vertex: index for index, vertex in enumerate(order)}
        edges: Set[Edge] = set()
        for vertex in order:
            for letter, targets in self._adjacency[vertex].items():
                if letter.inverted:
                    continue
                for target in targets:
                    source_id, target_id = numbering[vertex], numbering[self.find(target)]
                    if letter.cell:
                        source_id, target_id = min(source_id, target_id), max(source_id, target_id)
                    edges.add(Edge(source_id, letter.name, target_id))
        ranks = {letter.name: self.alphabet.rank(letter) for letter in self.alphabet.letters() if not letter.inverted}
        ordered_edges = tuple(sorted(edges, key=lambda edge: (edge.source, ranks[edge.label], edge.target)))
        return InverseAutomaton(
            alphabet=self.alphabet,
            vertices=tuple(range(len(order))),
            edges=ordered_edges,
            start=numbering[start],
            end=numbering[end],
        )

    def _breadth_first(self, start: Hashable) -> List[Hashable]:
        order = [start]
        seen = {start}
        queue = deque([start])
        letters = self.alphabet.letters()
        while queue:
            vertex = queue.popleft()
            moves = self._adjacency[vertex]
            for letter in letters:
                for target in sorted(moves.get(letter, ()), key=repr):
                    target = self.find(target)
                    if target not in seen:
                        seen.add(target)
                        order.append(target)
                        queue.append(target)
        return order


def linear_automaton(word: Word, alphabet: Alphabet) -> InverseAutomaton:
    """Simple path of ``len(word)`` edges spelling ``word``; not folded."""

    builder = AutomatonBuilder(alphabet)
    for position in range(len(word) + 1):
        builder.add_vertex(position)
    for position, letter in enumerate(word):
        builder.add_edge(position, letter, position + 1)
    return builder.to_automaton(0, len(word), canonical=False)


def flower_automaton(words: Iterable[Word], alphabet: Alphabet) -> InverseAutomaton:
    """One base vertex with a petal from base to base per generator word."""

    builder = AutomatonBuilder(alphabet)
    base = builder.add_vertex(0)
    serial = iter(range(1, 1 << 62))
    for word in words:
        if word:
            builder.add_path(base, word, base, lambda: next(serial))
    return builder.to_automaton(base, base, canonical=False)


def fold(automaton: InverseAutomaton) -> InverseAutomaton:
    """Quotient by the least congruence making ``automaton`` deterministic."""

    builder = AutomatonBuilder.from_automaton(automaton)
    builder.fold()
    return builder.to_automaton(automaton.start, automaton.end)


def run_from(automaton: InverseAutomaton, vertex: int, word: Word) -> Optional[int]:
    """Endpoint of the unique ``word``-labelled path from ``vertex``, if any."""

    if vertex not in automaton.moves:
        raise UnknownVertexError(f"Vertex {vertex} is not part of the automaton.")
    current: Optional[int] = vertex
    for letter in word:
        current = automaton.step(current, letter)
        if current is None:
            return None
    return current


def accepts(automaton: InverseAutomaton, word: Word) -> bool:
    return run_from(automaton, automaton.start, word) == automaton.end


def birooted_isomorphic(first: InverseAutomaton, second: InverseAutomaton) -> bool:
    """Label- and root-preserving isomorphism test by synchronised traversal."""

    if len(first.vertices) != len(second.vertices) or len(first.edges) != len(second.edges):
        return False
    mapping = {first.start: second.start}
    used = {second.start}
    queue = deque([first.start])
    while queue:
        vertex = queue.popleft()
        image = mapping[vertex]
        moves, image_moves = first.moves[vertex], second.moves[image]
        if set(moves) != set(image_moves):
            return False
        for letter, targets in moves.items():
            image_targets = image_moves[letter]
            if len(targets) != 1 or len(image_targets) != 1:
                raise NotFoldedError("Isomorphism testing needs folded automata.")
            target, image_target = targets[0], image_targets[0]
            if target in mapping:
                if mapping[target] != image_target:
                    return False
                continue
            if image_target in used:
                return False
            mapping[target] = image_target
            used.add(image_target)
            queue.append(target)
    return len(mapping) == len(first.vertices) and mapping.get(first.end) == second.end


def breadth_first_words(automaton: InverseAutomaton) -> Dict[int, Word]:
    """Shortlex-minimal word reaching each vertex from the start root."""

    words: Dict[int, Word] = {automaton.start: Word()}
    queue = deque([automaton.start])
    letters = automaton.alphabet.letters()
    while queue:
        vertex = queue.popleft()
        moves = automaton.moves[vertex]
        for letter in letters:
            for target in moves.get(letter, ()):
                if target not in words:
                    words[target] = words[vertex] + Word((letter,))
                    queue.append(target)
    return words


__all__ = [
    "AutomatonBuilder",
    "Edge",
    "InverseAutomaton",
    "accepts",
    "birooted_isomorphic",
    "breadth_first_words",
    "flower_automaton",
    "fold",
    "linear_automaton",
    "run_from",
]
