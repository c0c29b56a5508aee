from __future__ import annotations

import pytest

from immersioncheck.checks import (
    DEFAULT_CHECKS,
    Diagnostic,
    build_check_suite,
    labeling_diagnostics,
    run_checks,
    structural_checks,
)
from immersioncheck.complex import Cell, DeltaComplex, induced_base, validate
from immersioncheck.errors import InvalidConfigurationError


def _codes(diagnostics: tuple[Diagnostic, ...]) -> list[str]:
    return [diagnostic.code for diagnostic in diagnostics]


@pytest.mark.parametrize(
    "name",
    ["triangle", "torus", "tetrahedron", "collapsed_tetrahedron", "bouquet_a", "bouquet_ab", "double_cover", "path"],
)
def test_corpus_complexes_are_valid(load, name: str) -> None:
    assert validate(load(name)) == ()


def test_face_identity_violation_is_reported_first(load) -> None:
    problems = validate(load("bad"))

    assert problems[0].code == "E_FACE_IDENTITY"
    assert problems[0].cells[0] == "s0123"
    assert str(problems[0]).startswith("E_FACE_IDENTITY: Cell 's0123': d0(d2)")


def test_structural_failures_stop_the_run() -> None:
    cells = (
        Cell("v", 0),
        Cell("e", 1, ("v",)),
        Cell("t", 2, ("e", "e", "ghost")),
        Cell("e", 1, ("v", "v")),
    )

    problems = validate(DeltaComplex("broken", 2, cells))

    assert set(_codes(problems)) == {"E_FACE_ARITY", "E_UNKNOWN_FACE", "E_DUPLICATE_ID"}


def test_bad_identifiers_and_dimensions() -> None:
    cells = (Cell("v", 0), Cell("1x", 1, ("v", "v")), Cell("w", 3, ()))

    assert set(_codes(validate(DeltaComplex("odd", 1, cells)))) >= {"E_BAD_ID", "E_DIMENSION"}


def test_disconnected_complex() -> None:
    cells = (Cell("p", 0), Cell("q", 0))

    assert _codes(validate(DeltaComplex("pair", 0, cells))) == ["E_DISCONNECTED"]


def test_root_coherence_is_checked() -> None:
    cells = (
        Cell("A", 0),
        Cell("B", 0),
        Cell("x", 1, ("B", "A")),
        Cell("y", 1, ("A", "B")),
        Cell("T", 2, ("x", "x", "x")),
    )

    assert "E_ROOT_COHERENCE" in _codes(validate(DeltaComplex("twisted", 2, cells)))


def test_partial_labels_and_determinism() -> None:
    partial = DeltaComplex("partial", 1, (Cell("p", 0), Cell("e", 1, ("p", "p"), "a"), Cell("f", 1, ("p", "p"))))
    assert _codes(validate(partial)) == ["E_PARTIAL_LABELING"]

    fork = DeltaComplex(
        "fork",
        1,
        (Cell("p", 0), Cell("q", 0), Cell("e", 1, ("q", "p"), "a"), Cell("f", 1, ("p", "p"), "a")),
    )
    assert "E_LABEL_DETERMINISM" in _codes(validate(fork))


def test_labeling_diagnostics_against_a_base(load) -> None:
    torus = load("torus")
    base = induced_base(torus)

    assert labeling_diagnostics(torus, base) == ()
    assert "E_UNKNOWN_LABEL" in _codes(labeling_diagnostics(load("triangle"), base))


def test_build_check_suite_selects_by_name(load) -> None:
    suite = build_check_suite(["faces", "connectivity"])

    assert [check.name for check in suite] == ["faces", "connectivity"]
    assert run_checks(load("bad"), suite) == ()
    with pytest.raises(InvalidConfigurationError):
        build_check_suite(["faces", "nope"])
    with pytest.raises(InvalidConfigurationError):
        build_check_suite([])


def test_registry_order_and_structural_stage() -> None:
    assert list(DEFAULT_CHECKS) == [
        "identifiers",
        "dimensions",
        "faces",
        "face-identities",
        "root-coherence",
        "connectivity",
        "label-consistency",
        "label-determinism",
    ]
    assert [check.name for check in structural_checks()] == ["identifiers", "dimensions", "faces"]
