"""Registry of validation checks and the runner used by ``validate``."""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, MutableMapping, Sequence, Tuple

from ..complex import DeltaComplex
from ..errors import InvalidConfigurationError
from .base import ComplexCheck, Diagnostic
from .labeling import LabelConsistencyCheck, LabelDeterminismCheck
from .structural import (
    ConnectivityCheck,
    DimensionCheck,
    FaceIdentityCheck,
    FaceTableCheck,
    IdentifierCheck,
    RootCoherenceCheck,
)


def _default_registry() -> Dict[str, ComplexCheck]:
    return {
        check.name: check
        for check in (
            IdentifierCheck(),
            DimensionCheck(),
            FaceTableCheck(),
            FaceIdentityCheck(),
            RootCoherenceCheck(),
            ConnectivityCheck(),
            LabelConsistencyCheck(),
            LabelDeterminismCheck(),
        )
    }


DEFAULT_CHECKS: Mapping[str, ComplexCheck] = _default_registry()


def structural_checks(registry: Mapping[str, ComplexCheck] | None = None) -> Tuple[ComplexCheck, ...]:
    return tuple(check for check in (registry or DEFAULT_CHECKS).values() if check.structural)


def build_check_suite(
    names: Sequence[str],
    *,
    registry: Mapping[str, ComplexCheck] | None = None,
) -> List[ComplexCheck]:
    """Select checks by name, keeping the requested order."""

    checks: MutableMapping[str, ComplexCheck]
    checks = dict(registry or DEFAULT_CHECKS)
    active: List[ComplexCheck] = []
    for name in names:
        check = checks.get(name)
        if check is None:
            raise InvalidConfigurationError(f"Unknown check '{name}'.")
        active.append(check)
    if not active:
        raise InvalidConfigurationError("At least one check must be selected.")
    return active


def run_checks(complex_: DeltaComplex, checks: Iterable[ComplexCheck] | None = None) -> Tuple[Diagnostic, ...]:
    """Run structural checks first and stop there if any of them fail."""

    selected = tuple(DEFAULT_CHECKS.values() if checks is None else checks)
    found: List[Diagnostic] = []
    for check in selected:
        if check.structural:
            found.extend(check.run(complex_))
    if found:
        return tuple(found)
    for check in selected:
        if not check.structural:
            found.extend(check.run(complex_))
    return tuple(found)


__all__ = ["DEFAULT_CHECKS", "build_check_suite", "run_checks", "structural_checks"]
