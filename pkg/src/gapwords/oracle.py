"""Brute-force reference for gap-constrained subwords.

Everything here walks index selections one at a time, which is exponential on
purpose: these functions are the independent oracle that the matrix engine,
the closed forms and the recurrences are tested against. They stay naive and
share no code with those implementations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

from gapwords.words import GapSet, IndexSelection, Word, as_word

WordLike = Union[Word, str]
GapsLike = Union[GapSet, Iterable[int]]


def iter_selections(word: WordLike, gaps: GapsLike) -> Iterator[IndexSelection]:
    """Depth-first walk over start positions, then gap choices, in ascending order."""
    w = as_word(word)
    n = len(w)
    steps = [g for g in GapSet.of(gaps) if g < n]

    def walk(chosen: list[int]) -> Iterator[IndexSelection]:
        yield IndexSelection(tuple(chosen))
        last = chosen[-1]
        for g in steps:
            if last + g <= n:
                chosen.append(last + g)
                yield from walk(chosen)
                chosen.pop()

    for start in range(1, n + 1):
        yield from walk([start])


def enumerate_subwords(word: WordLike, gaps: GapsLike) -> set[str]:
    """All distinct subwords reachable with the allowed gaps (length >= 1)."""
    w = as_word(word)
    return {sel.extract(w) for sel in iter_selections(w, gaps)}


def count_selections(word: WordLike, gaps: GapsLike) -> int:
    """Number of valid index selections (occurrences, not distinct strings).

    On a rainbow word every selection extracts a different string, so this
    also equals the number of distinct subwords.
    """
    return sum(1 for _ in iter_selections(word, gaps))


def is_subword(candidate: str, word: WordLike, gaps: GapsLike) -> bool:
    """Scan the word for the candidate as a gap-constrained selection."""
    if not candidate:
        return False
    w = as_word(word)
    text = w.text
    n = len(text)
    steps = [g for g in GapSet.of(gaps) if g < n]

    def match(pos: int, remaining: str) -> bool:
        if not remaining:
            return True
        for g in steps:
            nxt = pos + g
            if nxt <= n and text[nxt - 1] == remaining[0] and match(nxt, remaining[1:]):
                return True
        return False

    return any(
        text[start - 1] == candidate[0] and match(start, candidate[1:])
        for start in range(1, n + 1)
    )
