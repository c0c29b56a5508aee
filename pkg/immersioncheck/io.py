"""Input/output helpers for complexes, cell maps and JSON interchange files."""

from __future__ import annotations

import json
import re
from pathlib import Path, PureWindowsPath
from typing import Any, Dict, List, Mapping, Tuple

from .complex import Cell, DeltaComplex
from .errors import InvalidInputError, MissingFileError
from .immersion import CellMap, cell_map_from_dict

VERTEX_PAIR_PATTERN = re.compile(r"^(?P<source>[^=\s]+)=(?P<target>[^=\s]+)$")


def read_json(path: Path | str) -> Any:
    """Read a UTF-8 JSON document from ``path``."""

    candidate = _normalise_path(path)
    if not candidate.exists():
        raise MissingFileError(f"Input file not found: {candidate}")
    try:
        with candidate.open("r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"Input file '{candidate}' is not valid JSON: {exc.msg} (line {exc.lineno}).") from exc
    except OSError as exc:  # pragma: no cover - filesystem guard
        raise MissingFileError(f"Could not read input file: {candidate}") from exc


def complex_from_dict(data: Any, *, default_name: str = "complex") -> DeltaComplex:
    """Parse the ``{"name", "dimension", "cells": {"k": [...]}}`` format."""

    if not isinstance(data, Mapping):
        raise InvalidInputError("A complex must be a JSON object.")
    cells_data = data.get("cells")
    if not isinstance(cells_data, Mapping):
        raise InvalidInputError("A complex needs a 'cells' object keyed by dimension.")
    cells: List[Cell] = []
    for key in sorted(cells_data, key=_dimension_key):
        dimension = _dimension_key(key)
        entries = cells_data[key]
        if not isinstance(entries, list):
            raise InvalidInputError(f"Cells of dimension {key} must be a list.")
        for entry in entries:
            cells.append(_cell_from_dict(entry, dimension))
    declared = data.get("dimension", max((cell.dimension for cell in cells), default=0))
    if not isinstance(declared, int) or isinstance(declared, bool):
        raise InvalidInputError("Field 'dimension' must be an integer.")
    name = data.get("name", default_name)
    if not isinstance(name, str):
        raise InvalidInputError("Field 'name' must be a string.")
    return DeltaComplex(name, declared, tuple(cells))


def _dimension_key(key: str) -> int:
    if not str(key).isdigit():
        raise InvalidInputError(f"Dimension key {key!r} must be a non-negative integer.")
    return int(key)


def _cell_from_dict(entry: Any, dimension: int) -> Cell:
    if not isinstance(entry, Mapping) or not isinstance(entry.get("id"), str):
        raise InvalidInputError(f"Every {dimension}-cell needs a string 'id'.")
    faces = entry.get("faces", [])
    if not isinstance(faces, list) or not all(isinstance(face, str) for face in faces):
        raise InvalidInputError(f"Faces of cell '{entry['id']}' must be a list of cell ids.")
    label = entry.get("label")
    if label is not None and not isinstance(label, str):
        raise InvalidInputError(f"Label of cell '{entry['id']}' must be a string.")
    return Cell(entry["id"], dimension, tuple(faces), label)


def complex_to_dict(complex_: DeltaComplex) -> Dict[str, Any]:
    cells: Dict[str, List[Dict[str, Any]]] = {}
    for cell in complex_.cells:
        payload: Dict[str, Any] = {"id": cell.id}
        if cell.dimension > 0:
            payload["faces"] = list(cell.faces)
            if cell.label is not None:
                payload["label"] = cell.label
        cells.setdefault(str(cell.dimension), []).append(payload)
    return {"name": complex_.name, "dimension": complex_.dimension, "cells": cells}


def load_complex(path: Path | str) -> DeltaComplex:
    return complex_from_dict(read_json(path), default_name=Path(path).stem)


def cell_map_to_dict(mapping: CellMap) -> Dict[str, Dict[str, str]]:
    return {str(dimension): cells for dimension, cells in mapping.by_dimension().items()}


def load_cell_map(path: Path | str, source: DeltaComplex, target: DeltaComplex) -> CellMap:
    data = read_json(path)
    if not isinstance(data, Mapping):
        raise InvalidInputError("A cell map must be a JSON object keyed by dimension.")
    return cell_map_from_dict(source, target, data)


def parse_vertex_pair(text: str) -> Tuple[str, str]:
    """Split ``v=u`` into its two vertex ids."""

    match = VERTEX_PAIR_PATTERN.fullmatch(text.strip())
    if match is None:
        raise InvalidInputError(f"Expected a vertex pair 'v=u', got {text!r}.")
    return match.group("source"), match.group("target")


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def write_text(path: Path | str, text: str) -> Path:
    target = _normalise_path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    return target


def _normalise_path(path: Path | str) -> Path:
    if isinstance(path, str) and re.match(r"^[A-Za-z]:\\", path):
        return Path(PureWindowsPath(path))
    return Path(path).expanduser().resolve()


__all__ = [
    "cell_map_to_dict",
    "complex_from_dict",
    "complex_to_dict",
    "dump_json",
    "load_cell_map",
    "load_complex",
    "parse_vertex_pair",
    "read_json",
    "write_text",
]
