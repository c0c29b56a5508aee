"""Test configuration for the project test-suite."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Callable

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from immersioncheck.complex import DeltaComplex  # noqa: E402
from immersioncheck.io import load_complex  # noqa: E402

CORPUS = ROOT / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture(scope="session")
def load() -> Callable[[str], DeltaComplex]:
    """Load ``corpus/<name>.json``."""

    def _load(name: str) -> DeltaComplex:
        return load_complex(CORPUS / f"{name}.json")

    return _load
