from __future__ import annotations

import pytest

from immersioncheck.complex import Cell, DeltaComplex, boundary_label, loop_contains, resolve_base, root
from immersioncheck.coset import SubmonoidSpec, build_complex
from immersioncheck.errors import (
    InvalidInputError,
    NoSuchMapError,
    NotAnImmersionError,
    UnknownVertexError,
)
from immersioncheck.immersion import (
    CellMap,
    cell_map_from_dict,
    check_immersion,
    complex_isomorphic,
    compose,
    equivalent_immersions,
    infer_map,
    is_covering,
    loop_monoid_embedded,
)
from immersioncheck.words import parse_words

from oracles import idempotents_lift, readable_words

IMMERSIONS = [
    ("double_cover", "bouquet_a", "p", "o", True),
    ("triple_cover", "bouquet_a", "p1", "o", True),
    ("path", "bouquet_a", "A", "o", False),
    ("path", "bouquet_a", "B", "o", False),
    ("bouquet_a", "bouquet_ab", "o", "o", False),
    ("triangle", "triangle", "A", "A", True),
    ("path", "double_cover", "A", "p", False),
    ("path", "triple_cover", "B", "p2", False),
    ("double_cover", "double_cover", "p", "q", True),
    ("tetrahedron", "tetrahedron", "v0", "v0", True),
]


def test_infer_map_follows_labels(load) -> None:
    mapping = infer_map(load("double_cover"), load("bouquet_a"), "p", "o")

    assert dict(mapping.assignment) == {"p": "o", "q": "o", "a1": "a", "a2": "a"}
    assert mapping.by_dimension() == {0: {"p": "o", "q": "o"}, 1: {"a1": "a", "a2": "a"}}
    assert mapping("a2") == "a"


def test_infer_map_failures(load) -> None:
    with pytest.raises(NoSuchMapError) as excinfo:
        infer_map(load("triangle"), load("bouquet_a"), "A", "o")
    assert excinfo.value.code == "E_NO_MAP"
    with pytest.raises(UnknownVertexError):
        infer_map(load("path"), load("bouquet_a"), "Z", "o")


def test_double_cover_is_a_covering(load) -> None:
    mapping = infer_map(load("double_cover"), load("bouquet_a"), "p", "o")

    assert check_immersion(mapping) == ()
    assert is_covering(mapping)


def test_path_immerses_but_does_not_cover(load) -> None:
    mapping = infer_map(load("path"), load("bouquet_a"), "A", "o")

    assert check_immersion(mapping) == ()
    assert not is_covering(mapping)
    assert loop_monoid_embedded(mapping, "A", 4)


def test_folding_map_is_not_locally_injective(load) -> None:
    source = DeltaComplex(
        "two_petals",
        1,
        (Cell("o", 0), Cell("e", 1, ("o", "o"), "a"), Cell("f", 1, ("o", "o"), "a")),
    )
    mapping = CellMap(source, load("bouquet_a"), {"o": "o", "e": "a", "f": "a"})

    codes = {problem.code for problem in check_immersion(mapping)}

    assert codes == {"E_LOCAL_INJECTIVITY"}
    with pytest.raises(NotAnImmersionError):
        is_covering(mapping)


def test_explicit_map_problems_are_reported(load) -> None:
    source, target = load("double_cover"), load("bouquet_a")

    partial = cell_map_from_dict(source, target, {"0": {"p": "o", "q": "o"}, "1": {"a1": "a"}})
    assert [problem.code for problem in check_immersion(partial)] == ["E_MAP_TOTAL"]

    wrong = cell_map_from_dict(source, target, {"0": {"p": "o", "q": "a"}, "1": {"a1": "a", "a2": "ghost"}})
    assert {problem.code for problem in check_immersion(wrong)} == {"E_MAP_DIMENSION", "E_MAP_UNKNOWN_TARGET"}

    with pytest.raises(InvalidInputError):
        cell_map_from_dict(source, target, {"zero": {}})


def test_label_and_face_violations(load) -> None:
    source = load("path")
    target = DeltaComplex(
        "bouquet_b",
        1,
        (Cell("o", 0), Cell("b", 1, ("o", "o"), "b"), Cell("o2", 0), Cell("c", 1, ("o2", "o"), "a")),
    )
    mapping = CellMap(source, target, {"A": "o", "B": "o", "e": "b"})

    assert {problem.code for problem in check_immersion(mapping)} == {"E_MAP_LABEL"}

    shifted = CellMap(source, target, {"A": "o", "B": "o", "e": "c"})
    assert "E_MAP_FACE" in {problem.code for problem in check_immersion(shifted)}


@pytest.mark.parametrize(("source", "target", "start", "image", "covering"), IMMERSIONS)
def test_star_surjectivity_matches_idempotent_lifting(load, source, target, start, image, covering) -> None:
    mapping = infer_map(load(source), load(target), start, image)

    assert is_covering(mapping) is covering
    for vertex_id in mapping.source.vertex_ids:
        assert idempotents_lift(mapping, vertex_id, 6) is covering


def test_isomorphism_and_equivalence(load) -> None:
    double = load("double_cover")
    swapped = DeltaComplex(
        "swapped",
        1,
        (Cell("s", 0), Cell("t", 0), Cell("b1", 1, ("t", "s"), "a"), Cell("b2", 1, ("s", "t"), "a")),
    )

    isomorphism = complex_isomorphic(double, swapped)
    assert isomorphism is not None and isomorphism.is_bijective()
    assert complex_isomorphic(double, load("triple_cover")) is None

    first = infer_map(double, load("bouquet_a"), "p", "o")
    second = infer_map(swapped, load("bouquet_a"), "t", "o")
    witness = equivalent_immersions(first, second)
    assert witness is not None
    assert dict(compose(second, witness).assignment) == dict(first.assignment)


def test_compose_requires_matching_domains(load) -> None:
    first = infer_map(load("path"), load("bouquet_a"), "A", "o")

    with pytest.raises(InvalidInputError):
        compose(first, first)


@pytest.mark.parametrize(("source", "target", "start", "image", "covering"), IMMERSIONS)
def test_immersions_carry_loops_to_loops(load, source, target, start, image, covering) -> None:
    mapping = infer_map(load(source), load(target), start, image)

    assert check_immersion(mapping) == ()
    for vertex_id in mapping.source.vertex_ids:
        for word, end in readable_words(mapping.source, vertex_id, 6):
            if end == vertex_id:
                assert loop_contains(mapping.target, mapping(vertex_id), word), (vertex_id, word)


@pytest.mark.parametrize(("source", "target", "start", "image", "covering"), IMMERSIONS)
def test_immersions_preserve_roots_and_boundary_labels(load, source, target, start, image, covering) -> None:
    mapping = infer_map(load(source), load(target), start, image)

    for cell in mapping.source.cells:
        if cell.dimension == 0:
            continue
        assert mapping(root(mapping.source, cell.id)) == root(mapping.target, mapping(cell.id))
        if cell.dimension >= 2:
            assert boundary_label(mapping.source, cell.id) == boundary_label(mapping.target, mapping(cell.id))


def test_composites_of_immersions_are_immersions(load) -> None:
    into_cover = infer_map(load("path"), load("triple_cover"), "A", "p0")
    cover = infer_map(load("triple_cover"), load("bouquet_a"), "p0", "o")
    composite = compose(cover, into_cover)

    assert check_immersion(composite) == ()
    assert dict(composite.assignment) == {"A": "o", "B": "o", "e": "a"}

    base, tetrahedron = resolve_base(load("tetrahedron"))
    spec = SubmonoidSpec(tetrahedron, "v1", parse_words(["e12 e23 e13'"], base.alphabet))
    lifted = build_complex(spec)
    onto_base = infer_map(tetrahedron, base.complex, "v0", base.vertex)

    assert check_immersion(onto_base) == ()
    assert check_immersion(compose(onto_base, lifted.immersion)) == ()
