"""Alphabets, letters and words with involution.

Words are written as whitespace separated tokens.  A token is a letter name,
optionally followed by an apostrophe for the inverse letter; the single token
``1`` denotes the empty word.  Cell letters (the sets ``P_k``) are their own
inverses, so an apostrophe on them is dropped while parsing and never printed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

from .errors import IncompatibleBasesError, InvalidAlphabetError, UnknownLetterError, WordSyntaxError

NAME_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
TOKEN_PATTERN = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?P<inverse>')?$")
IDENTITY_TOKEN = "1"


@dataclass(frozen=True, order=True)
class Letter:
    """A letter of ``X ∪ X⁻¹ ∪ P``."""

    name: str
    inverted: bool = False
    cell: bool = False

    def __post_init__(self) -> None:
        if self.cell and self.inverted:
            object.__setattr__(self, "inverted", False)

    def inverse(self) -> "Letter":
        if self.cell:
            return self
        return Letter(self.name, not self.inverted, False)

    @property
    def positive(self) -> "Letter":
        return Letter(self.name, False, self.cell)

    def __str__(self) -> str:
        return f"{self.name}'" if self.inverted else self.name


@dataclass(frozen=True)
class Word:
    """Finite sequence of letters; the empty word is the identity."""

    letters: Tuple[Letter, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> Letter:
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def has_cell_letters(self) -> bool:
        return any(letter.cell for letter in self.letters)

    def __str__(self) -> str:
        return format_word(self)


EMPTY_WORD = Word()


@dataclass(frozen=True)
class Alphabet:
    """The label sets ``X`` (edge names) and ``P_k`` (cell names with dimension)."""

    x_letters: Tuple[str, ...] = ()
    p_letters: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "x_letters", tuple(self.x_letters))
        object.__setattr__(self, "p_letters", MappingProxyType(dict(self.p_letters)))
        seen: set[str] = set()
        for name in (*self.x_letters, *self.p_letters):
            if not NAME_PATTERN.fullmatch(name):
                raise InvalidAlphabetError(f"Letter name '{name}' is not an identifier.")
            if name in seen:
                raise InvalidAlphabetError(f"Letter name '{name}' is declared twice.")
            seen.add(name)
        for name, dimension in self.p_letters.items():
            if dimension < 2:
                raise InvalidAlphabetError(
                    f"Cell letter '{name}' has dimension {dimension}; cell letters need dimension >= 2."
                )

    def __hash__(self) -> int:
        return hash((self.x_letters, tuple(self.p_letters.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.x_letters == other.x_letters and tuple(self.p_letters.items()) == tuple(
            other.p_letters.items()
        )

    def __contains__(self, name: object) -> bool:
        return name in self.x_letters or name in self.p_letters

    def letter(self, name: str, inverted: bool = False) -> Letter:
        """Return the normalised letter called ``name``."""

        if name in self.p_letters:
            return Letter(name, False, True)
        if name in self.x_letters:
            return Letter(name, inverted, False)
        raise UnknownLetterError(f"Unknown letter '{name}'.")

    def letters(self) -> Tuple[Letter, ...]:
        """All letters in canonical order: X (positive before inverse), then P."""

        return self._ordered

    def rank(self, letter: Letter) -> int:
        return self._ranks[letter]

    def dimension(self, name: str) -> int:
        if name in self.p_letters:
            return self.p_letters[name]
        if name in self.x_letters:
            return 1
        raise UnknownLetterError(f"Unknown letter '{name}'.")

    @cached_property
    def _ordered(self) -> Tuple[Letter, ...]:
        ordered: list[Letter] = []
        for name in self.x_letters:
            ordered.extend((Letter(name), Letter(name, True)))
        ordered.extend(Letter(name, False, True) for name in self.p_letters)
        return tuple(ordered)

    @cached_property
    def _ranks(self) -> Mapping[Letter, int]:
        return {letter: index for index, letter in enumerate(self._ordered)}

    def merge(self, other: "Alphabet") -> "Alphabet":
        """Union of two alphabets, keeping the declaration order of ``self`` first."""

        x_letters = list(self.x_letters)
        p_letters = dict(self.p_letters)
        for name in other.x_letters:
            if name in p_letters:
                raise IncompatibleBasesError(f"Letter '{name}' is an edge label in one base and a cell label in the other.")
            if name not in x_letters:
                x_letters.append(name)
        for name, dimension in other.p_letters.items():
            if name in x_letters:
                raise IncompatibleBasesError(f"Letter '{name}' is an edge label in one base and a cell label in the other.")
            if p_letters.setdefault(name, dimension) != dimension:
                raise IncompatibleBasesError(
                    f"Letter '{name}' has dimension {p_letters[name]} in one base and {dimension} in the other."
                )
        return Alphabet(tuple(x_letters), p_letters)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse whitespace separated tokens into a :class:`Word`."""

    tokens = text.split()
    if tokens == [IDENTITY_TOKEN]:
        return EMPTY_WORD
    letters: list[Letter] = []
    for token in tokens:
        match = TOKEN_PATTERN.fullmatch(token)
        if match is None:
            if token == IDENTITY_TOKEN:
                raise WordSyntaxError(f"The identity token '1' must stand alone: {text!r}.")
            raise WordSyntaxError(f"Malformed token {token!r} in word {text!r}.")
        letters.append(alphabet.letter(match.group("name"), match.group("inverse") is not None))
    return Word(tuple(letters))


def parse_words(texts: Iterable[str], alphabet: Alphabet) -> Tuple[Word, ...]:
    return tuple(parse_word(text, alphabet) for text in texts)


def format_word(word: Word | Sequence[Letter]) -> str:
    """Render ``word`` in the token syntax accepted by :func:`parse_word`."""

    letters = tuple(word)
    if not letters:
        return IDENTITY_TOKEN
    return " ".join(str(letter) for letter in letters)


def invert_word(word: Word) -> Word:
    """``(x1 x2 ... xn)⁻¹ = xn⁻¹ ... x2⁻¹ x1⁻¹`` with cell letters fixed."""

    return word.inverse()


def shortlex_key(word: Word, alphabet: Alphabet) -> Tuple[int, Tuple[int, ...]]:
    return len(word), tuple(alphabet.rank(letter) for letter in word)


__all__ = [
    "Alphabet",
    "EMPTY_WORD",
    "Letter",
    "Word",
    "format_word",
    "invert_word",
    "parse_word",
    "parse_words",
    "shortlex_key",
]
