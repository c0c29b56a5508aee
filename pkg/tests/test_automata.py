from __future__ import annotations

import random
from itertools import product

import pytest

from immersioncheck.automata import (
    AutomatonBuilder,
    Edge,
    InverseAutomaton,
    accepts,
    birooted_isomorphic,
    breadth_first_words,
    flower_automaton,
    fold,
    linear_automaton,
    run_from,
)
from immersioncheck.errors import NotFoldedError, UnknownVertexError
from immersioncheck.unionfind import UnionFind
from immersioncheck.words import Alphabet, Letter, Word, format_word, parse_word

ALPHABET = Alphabet(("a", "b"), {"rho": 2})


def _word(text: str) -> Word:
    return parse_word(text, ALPHABET)


def test_union_find_merges_classes() -> None:
    forest: UnionFind[int] = UnionFind()

    forest.union(1, 2)
    forest.union(3, 4)
    assert not forest.same(1, 3)
    forest.union(2, 4)

    assert forest.same(1, 3)
    assert forest.find(5) == 5


def test_linear_automaton_is_a_path() -> None:
    automaton = linear_automaton(_word("a b a'"), ALPHABET)

    assert automaton.vertices == (0, 1, 2, 3)
    assert (automaton.start, automaton.end) == (0, 3)
    assert Edge(3, "a", 2) in automaton.edges
    assert accepts(automaton, _word("a b a'"))


def test_fold_of_free_cancellation_gives_munn_tree() -> None:
    folded = fold(linear_automaton(_word("a a' a"), ALPHABET))

    assert folded.vertices == (0, 1)
    assert folded.edges == (Edge(0, "a", 1),)
    assert (folded.start, folded.end) == (0, 1)
    assert folded.is_deterministic()


def test_fold_identifies_parallel_paths() -> None:
    builder = AutomatonBuilder(ALPHABET)
    for vertex in range(4):
        builder.add_vertex(vertex)
    builder.add_edge(0, Letter("a"), 1)
    builder.add_edge(0, Letter("a"), 2)
    builder.add_edge(1, Letter("b"), 3)
    builder.add_edge(2, Letter("b"), 0)

    merges = builder.fold()
    automaton = builder.to_automaton(0, 0)

    assert merges == 2
    assert len(automaton.vertices) == 2
    assert automaton.is_deterministic()


def test_cell_edges_are_undirected() -> None:
    automaton = linear_automaton(_word("rho"), ALPHABET)

    assert automaton.edges == (Edge(0, "rho", 1),)
    assert run_from(automaton, 1, _word("rho")) == 0
    assert run_from(automaton, 0, _word("rho rho")) == 0


def test_unfolded_runs_raise() -> None:
    automaton = flower_automaton([_word("a b"), _word("a a")], ALPHABET)

    with pytest.raises(NotFoldedError):
        run_from(automaton, 0, _word("a"))
    with pytest.raises(UnknownVertexError):
        run_from(automaton, 99, _word("a"))


def test_flower_automaton_reads_generators_as_loops() -> None:
    folded = fold(flower_automaton([_word("a b a'"), _word("b")], ALPHABET))

    assert accepts(folded, _word("a b a'"))
    assert accepts(folded, _word("b b'"))
    assert not accepts(folded, _word("a"))


def test_canonical_numbering_is_breadth_first() -> None:
    folded = fold(linear_automaton(_word("b a"), ALPHABET))

    assert folded.edges == (Edge(0, "b", 1), Edge(1, "a", 2))
    assert breadth_first_words(folded) == {0: Word(), 1: _word("b"), 2: _word("b a")}


def test_birooted_isomorphism_respects_roots() -> None:
    first = fold(linear_automaton(_word("a b"), ALPHABET))
    second = fold(linear_automaton(_word("a b b' b"), ALPHABET))
    third = fold(linear_automaton(_word("a"), ALPHABET))

    assert birooted_isomorphic(first, second)
    assert not birooted_isomorphic(first, third)
    assert not birooted_isomorphic(first, first.with_roots(0, 0))


def test_reduced_words_fold_to_isomorphic_automata() -> None:
    generator = random.Random(1234)
    letters = [letter for letter in ALPHABET.letters() if not letter.cell]
    for _ in range(200):
        core = Word(tuple(generator.choice(letters) for _ in range(generator.randint(0, 5))))
        detour = Word(tuple(generator.choice(letters) for _ in range(generator.randint(1, 3))))
        padded = core + detour + detour.inverse()
        folded = fold(linear_automaton(padded, ALPHABET))
        assert accepts(folded, core), format_word(padded)
        assert folded.is_connected()


def test_breadth_first_words_are_shortlex_minimal() -> None:
    folded = fold(flower_automaton([_word("a b' a'"), _word("b b")], ALPHABET))

    for vertex, word in breadth_first_words(folded).items():
        assert run_from(folded, folded.start, word) == vertex


def _random_word(generator: random.Random, max_length: int) -> Word:
    letters = ALPHABET.letters()
    return Word(tuple(generator.choice(letters) for _ in range(generator.randint(0, max_length))))


def _folded_graph(
    edges: list[tuple[int, Letter, int]], size: int, roots: tuple[int, int], shuffler: random.Random
) -> InverseAutomaton:
    names = list(range(size))
    shuffler.shuffle(names)
    builder = AutomatonBuilder(ALPHABET)
    for vertex in shuffler.sample(range(size), size):
        builder.add_vertex(f"v{names[vertex]}")
    for source, letter, target in shuffler.sample(edges, len(edges)):
        builder.add_edge(f"v{names[source]}", letter, f"v{names[target]}")
    builder.fold()
    return builder.to_automaton(f"v{names[roots[0]]}", f"v{names[roots[1]]}")


@pytest.mark.parametrize("seed", range(25))
def test_fold_does_not_depend_on_merge_order(seed: int) -> None:
    generator = random.Random(seed)
    letters = ALPHABET.letters()
    size = generator.randint(2, 8)
    edges = [(generator.randrange(vertex), generator.choice(letters), vertex) for vertex in range(1, size)]
    edges += [
        (generator.randrange(size), generator.choice(letters), generator.randrange(size))
        for _ in range(generator.randint(0, 6))
    ]
    roots = (0, generator.randrange(size))

    reference = _folded_graph(edges, size, roots, random.Random(0))
    assert reference.is_deterministic()
    for trial in range(1, 6):
        other = _folded_graph(edges, size, roots, random.Random(1000 * seed + trial))
        assert birooted_isomorphic(reference, other)
        assert other.signature() == reference.signature()


def test_fold_is_idempotent() -> None:
    generator = random.Random(77)
    for _ in range(100):
        words = [_random_word(generator, 5) for _ in range(generator.randint(1, 3))]
        folded = fold(flower_automaton(words, ALPHABET))
        refolded = fold(folded)

        assert birooted_isomorphic(folded, refolded)
        assert refolded.signature() == folded.signature()


def test_accepted_words_accept_their_idempotent_padding() -> None:
    automata = [
        fold(linear_automaton(_word("a b a'"), ALPHABET)),
        fold(linear_automaton(_word("a rho b' a"), ALPHABET)),
        fold(flower_automaton([_word("a b a'"), _word("b b")], ALPHABET)),
        fold(flower_automaton([_word("a rho"), _word("b a'")], ALPHABET)),
    ]
    letters = ALPHABET.letters()
    for automaton in automata:
        accepted = 0
        for length in range(5):
            for combination in product(letters, repeat=length):
                word = Word(combination)
                if accepts(automaton, word):
                    accepted += 1
                    assert accepts(automaton, word + word.inverse() + word), format_word(word)
        assert accepted > 0


def _renamed(automaton: InverseAutomaton, offset: int, generator: random.Random) -> InverseAutomaton:
    images = [offset + index for index in range(len(automaton.vertices))]
    generator.shuffle(images)
    rename = dict(zip(automaton.vertices, images))
    return InverseAutomaton(
        alphabet=automaton.alphabet,
        vertices=tuple(sorted(images)),
        edges=tuple(Edge(rename[edge.source], edge.label, rename[edge.target]) for edge in automaton.edges),
        start=rename[automaton.start],
        end=rename[automaton.end],
    )


def test_birooted_isomorphism_is_an_equivalence() -> None:
    texts = ["a b", "a b b' b", "a a' a b", "b a", "a", "a a' a", "a rho", "a rho rho", "rho a a'", "1", "b b'"]
    automata = [fold(linear_automaton(_word(text), ALPHABET)) for text in texts]
    generator = random.Random(5)
    automata += [_renamed(automaton, 100, generator) for automaton in automata]

    for first in automata:
        assert birooted_isomorphic(first, first)
        for second in automata:
            related = birooted_isomorphic(first, second)
            assert related == birooted_isomorphic(second, first)
            assert related == (fold(first).signature() == fold(second).signature())
            if not related:
                continue
            for third in automata:
                if birooted_isomorphic(second, third):
                    assert birooted_isomorphic(first, third)

    assert birooted_isomorphic(automata[0], automata[1])
    assert birooted_isomorphic(automata[0], automata[len(texts)])
    assert not birooted_isomorphic(automata[0], automata[3])
