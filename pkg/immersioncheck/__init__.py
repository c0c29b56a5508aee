"""Immersions between Δ-complexes and the inverse monoids that describe them."""

from .app import CommandResult, ImmersionCheckApp
from .complex import BaseComplex, Cell, DeltaComplex
from .coset import LiftedComplex, SubmonoidSpec, are_conjugate, build_complex, coset_automaton
from .immersion import CellMap, check_immersion, infer_map, is_covering
from .monoid import ClosureConfig, PresentedMonoid
from .words import Alphabet, Letter, Word, parse_word

__all__ = [
    "Alphabet",
    "BaseComplex",
    "Cell",
    "CellMap",
    "ClosureConfig",
    "CommandResult",
    "DeltaComplex",
    "ImmersionCheckApp",
    "Letter",
    "LiftedComplex",
    "PresentedMonoid",
    "SubmonoidSpec",
    "Word",
    "are_conjugate",
    "build_complex",
    "check_immersion",
    "coset_automaton",
    "infer_map",
    "is_covering",
    "parse_word",
]
