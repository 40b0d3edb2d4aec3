"""Core types for scattered subwords with gap constraints.

A scattered subword picks letters at strictly increasing positions of a word;
here the difference between consecutive chosen positions must come from a
fixed set of allowed gaps. Positions are 1-based throughout, matching the
usual convention in combinatorics on words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

ALPHABET = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"


@dataclass(frozen=True)
class Word:
    """A nonempty word; letters are opaque, case-sensitive characters."""

    text: str

    def __post_init__(self) -> None:
        if not isinstance(self.text, str):
            raise TypeError(f"word must be a string, got {type(self.text).__name__}")
        if not self.text:
            raise ValueError("word must be nonempty")

    def __len__(self) -> int:
        return len(self.text)

    @property
    def letters(self) -> tuple[str, ...]:
        return tuple(self.text)

    @property
    def is_rainbow(self) -> bool:
        """True when all letters are pairwise distinct."""
        return len(set(self.text)) == len(self.text)


def parse_word(text: str) -> Word:
    """Build a Word from raw text, one letter per character; empty input is rejected."""
    return Word(text)


def as_word(value: Union[Word, str]) -> Word:
    return value if isinstance(value, Word) else Word(value)


def rainbow_word(n: int) -> Word:
    """A canonical rainbow word of length n (letters a, b, c, ...)."""
    if not 1 <= n <= len(ALPHABET):
        raise ValueError(f"canonical rainbow words need 1 <= n <= {len(ALPHABET)}, got {n}")
    return Word(ALPHABET[:n])


@dataclass(frozen=True)
class GapSet:
    """The allowed distances between consecutive chosen positions.

    Canonical form: sorted, deduplicated, every value >= 1. The set may be
    empty, in which case only single-letter subwords exist. Values at or
    above the word length are legal and simply never usable, so one GapSet
    can serve words of any length.
    """

    gaps: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        canon = tuple(sorted(set(self.gaps)))
        for g in canon:
            if not isinstance(g, int) or isinstance(g, bool) or g < 1:
                raise ValueError(f"gaps must be integers >= 1, got {g!r}")
        object.__setattr__(self, "gaps", canon)

    @classmethod
    def of(cls, value: Union["GapSet", Iterable[int]]) -> "GapSet":
        if isinstance(value, GapSet):
            return value
        return cls(tuple(value))

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self) -> int:
        return len(self.gaps)

    def __contains__(self, item: object) -> bool:
        return item in self.gaps

    def bounds_if_contiguous(self) -> tuple[int, int] | None:
        """(lo, hi) when the gaps form the full run lo..hi, else None."""
        if not self.gaps:
            return None
        lo, hi = self.gaps[0], self.gaps[-1]
        if hi - lo + 1 == len(self.gaps):
            return lo, hi
        return None


@dataclass(frozen=True)
class IndexSelection:
    """Strictly increasing 1-based positions selecting one scattered subword."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.indices:
            raise ValueError("a selection must pick at least one position")
        prev = 0
        for i in self.indices:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise ValueError(f"positions must be integers >= 1, got {i!r}")
            if i <= prev:
                raise ValueError("positions must be strictly increasing")
            prev = i

    def gaps_used(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.indices, self.indices[1:]))

    def fits(self, word: Union[Word, str], gaps: Union[GapSet, Iterable[int]]) -> bool:
        """Whether this selection is valid for the given word and gap set."""
        w = as_word(word)
        gs = GapSet.of(gaps)
        return self.indices[-1] <= len(w) and all(g in gs for g in self.gaps_used())

    def extract(self, word: Union[Word, str]) -> str:
        """The subword this selection picks out of the given word."""
        w = as_word(word)
        if self.indices[-1] > len(w):
            raise ValueError("selection reaches past the end of the word")
        return "".join(w.text[i - 1] for i in self.indices)
