"""The presented inverse monoid ``M(X, P)``.

Relations are ``ρ = ρρ`` and ``ρ = ρ·bl(ρ)`` for every cell letter ``ρ``.
Schützenberger automata are computed by alternating full folds with full
expansion sweeps until a sweep finds nothing to sew.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Hashable, Iterator, List, Tuple

from .automata import AutomatonBuilder, InverseAutomaton, accepts, fold, linear_automaton
from .complex import BaseComplex, boundary_label
from .errors import ClosureBudgetExceededError, InvalidConfigurationError, PLetterPresentError
from .words import Alphabet, Word, format_word

DEFAULT_MAX_ROUNDS = 10000
DEFAULT_MEMO_SIZE = 4096


@dataclass(frozen=True)
class ClosureConfig:
    max_rounds: int = DEFAULT_MAX_ROUNDS

    def __post_init__(self) -> None:
        if self.max_rounds < 1:
            raise InvalidConfigurationError(f"max_rounds must be at least 1, got {self.max_rounds}.")


@dataclass(frozen=True)
class Presentation:
    """Generators ``X ∪ P`` of ``base`` with the two relations per cell letter."""

    base: BaseComplex
    relations: Tuple[Tuple[Word, Word], ...]

    @property
    def alphabet(self) -> Alphabet:
        return self.base.alphabet


@dataclass(frozen=True)
class ClosureResult:
    automaton: InverseAutomaton
    rounds: int


@dataclass(frozen=True)
class GroupPresentation:
    generators: Tuple[str, ...]
    relators: Tuple[Word, ...]

    def __str__(self) -> str:
        relators = ", ".join(format_word(relator) for relator in self.relators)
        return f"⟨{','.join(self.generators)} | {relators}⟩"


def relations(base: BaseComplex) -> Presentation:
    pairs: List[Tuple[Word, Word]] = []
    for name in base.cell_letters():
        letter = base.alphabet.letter(name)
        single = Word((letter,))
        pairs.append((single, single + single))
        pairs.append((single, single + boundary_label(base.complex, name)))
    return Presentation(base, tuple(pairs))


def _directed(presentation: Presentation) -> Iterator[Tuple[Word, Word]]:
    for left, right in presentation.relations:
        yield left, right
        yield right, left


def close_automaton(
    presentation: Presentation, seed: InverseAutomaton, config: ClosureConfig | None = None
) -> ClosureResult:
    """Fold and expand ``seed`` until no relation asks for a new path."""

    config = config or ClosureConfig()
    builder = AutomatonBuilder.from_automaton(seed, rename=lambda vertex: (0, vertex))
    start: Hashable = (0, seed.start)
    end: Hashable = (0, seed.end)
    directed = tuple(_directed(presentation))
    for round_number in range(1, config.max_rounds + 1):
        builder.fold()
        tasks: Dict[Tuple[Hashable, Word, Hashable], None] = {}
        for vertex in builder.vertices():
            for present, required in directed:
                target = builder.run(vertex, present)
                if target is not None and builder.run(vertex, required) != target:
                    tasks.setdefault((vertex, required, target), None)
        if not tasks:
            return ClosureResult(builder.to_automaton(start, end), round_number)
        serial = iter(range(1, 1 << 62))
        for source, word, target in tasks:
            builder.add_path(source, word, target, lambda: builder.add_vertex((round_number, next(serial))))
    raise ClosureBudgetExceededError(f"No fixed point within {config.max_rounds} closure rounds.")


def munn_tree(word: Word, alphabet: Alphabet) -> InverseAutomaton:
    if word.has_cell_letters():
        raise PLetterPresentError(f"Munn trees are defined for words over X only, got '{format_word(word)}'.")
    return fold(linear_automaton(word, alphabet))


def schutzenberger(presentation: Presentation, word: Word, config: ClosureConfig | None = None) -> InverseAutomaton:
    seed = linear_automaton(word, presentation.alphabet)
    return close_automaton(presentation, seed, config).automaton


def m_leq(presentation: Presentation, lower: Word, upper: Word, config: ClosureConfig | None = None) -> bool:
    return accepts(schutzenberger(presentation, lower, config), upper)


def m_equal(presentation: Presentation, first: Word, second: Word, config: ClosureConfig | None = None) -> bool:
    return m_leq(presentation, first, second, config) and m_leq(presentation, second, first, config)


def is_idempotent(presentation: Presentation, word: Word, config: ClosureConfig | None = None) -> bool:
    return m_equal(presentation, word, word + word, config)


def pi1_presentation(base: BaseComplex) -> GroupPresentation:
    relators = tuple(
        boundary_label(base.complex, name)
        for name, dimension in base.alphabet.p_letters.items()
        if dimension == 2
    )
    return GroupPresentation(base.alphabet.x_letters, relators)


class PresentedMonoid:
    """Word problem service for one presentation with a bounded automaton memo.

    Closures are memoised per word in an LRU cache of ``memo_size`` entries.
    Concurrent callers may compute the same automaton twice; the results are
    equal and immutable.
    """

    def __init__(
        self, presentation: Presentation, config: ClosureConfig | None = None, *, memo_size: int = DEFAULT_MEMO_SIZE
    ) -> None:
        self.presentation = presentation
        self.config = config or ClosureConfig()
        self._closure = lru_cache(maxsize=memo_size)(self._close)

    @classmethod
    def from_base(cls, base: BaseComplex, config: ClosureConfig | None = None) -> "PresentedMonoid":
        return cls(relations(base), config)

    @property
    def alphabet(self) -> Alphabet:
        return self.presentation.alphabet

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------
    def closure(self, word: Word) -> ClosureResult:
        return self._closure(word)

    def schutzenberger(self, word: Word) -> InverseAutomaton:
        return self.closure(word).automaton

    def leq(self, lower: Word, upper: Word) -> bool:
        return accepts(self.schutzenberger(lower), upper)

    def equal(self, first: Word, second: Word) -> bool:
        return self.leq(first, second) and self.leq(second, first)

    def is_idempotent(self, word: Word) -> bool:
        return self.equal(word, word + word)

    def canonical_form(self, word: Word) -> Tuple[int, int, int, Tuple[Tuple[int, str, int], ...]]:
        """Hashable key shared exactly by words equal in the monoid."""

        automaton = self.schutzenberger(word)
        return automaton.signature()

    def cached_closures(self) -> int:
        return self._closure.cache_info().currsize

    def _close(self, word: Word) -> ClosureResult:
        seed = linear_automaton(word, self.alphabet)
        return close_automaton(self.presentation, seed, self.config)


__all__ = [
    "ClosureConfig",
    "ClosureResult",
    "DEFAULT_MAX_ROUNDS",
    "DEFAULT_MEMO_SIZE",
    "GroupPresentation",
    "Presentation",
    "PresentedMonoid",
    "close_automaton",
    "is_idempotent",
    "m_equal",
    "m_leq",
    "munn_tree",
    "pi1_presentation",
    "relations",
    "schutzenberger",
]
