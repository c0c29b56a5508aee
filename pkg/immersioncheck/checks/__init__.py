"""Validation checks for Δ-complexes."""

from .base import ComplexCheck, Diagnostic
from .factory import DEFAULT_CHECKS, build_check_suite, run_checks, structural_checks
from .labeling import LabelConsistencyCheck, LabelDeterminismCheck, determinism_diagnostics, labeling_diagnostics
from .structural import (
    ConnectivityCheck,
    DimensionCheck,
    FaceIdentityCheck,
    FaceTableCheck,
    IdentifierCheck,
    RootCoherenceCheck,
)

__all__ = [
    "ComplexCheck",
    "ConnectivityCheck",
    "DEFAULT_CHECKS",
    "Diagnostic",
    "DimensionCheck",
    "FaceIdentityCheck",
    "FaceTableCheck",
    "IdentifierCheck",
    "LabelConsistencyCheck",
    "LabelDeterminismCheck",
    "RootCoherenceCheck",
    "build_check_suite",
    "determinism_diagnostics",
    "labeling_diagnostics",
    "run_checks",
    "structural_checks",
]
