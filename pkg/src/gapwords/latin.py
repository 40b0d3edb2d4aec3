"""Set-valued Warshall pass that lists every nontrivial gap-constrained subword.

Instead of path counts, cell (i, j) holds the actual subwords that start at
position i and end at position j (always length >= 2). Joining through an
intermediate position k concatenates a left witness with a right witness
whose first letter is erased, so the shared letter at k is not doubled.
"""

from __future__ import annotations

from typing import Iterable, Union

from gapwords.words import GapSet, Word, as_word

SetMatrix = list[list[set[str]]]


def initial_latin_matrix(word: Union[Word, str], gaps: Union[GapSet, Iterable[int]]) -> SetMatrix:
    """Seed matrix: cell (i, j) is {letter_i + letter_j} when j - i is an allowed gap."""
    w = as_word(word)
    text = w.text
    n = len(text)
    allowed = set(GapSet.of(gaps).gaps)
    return [
        [{text[i] + text[j]} if (j - i) in allowed else set() for j in range(n)]
        for i in range(n)
    ]


def warshall_latin(matrix: SetMatrix) -> SetMatrix:
    """Grow the seed matrix to a fixpoint; input cells are copied, not mutated.

    After the pass, cell (i, j) holds every subword that starts at position i
    and ends at position j. The k-outer loop order means a cell (i, k) or
    (k, j) is never modified while k is the join point, so one sweep reaches
    the fixpoint.
    """
    w = _checked_cells(matrix)
    n = len(w)
    for k in range(n):
        wk = w[k]
        for i in range(n):
            left = w[i][k]
            if not left:
                continue
            wi = w[i]
            for j in range(n):
                right = wk[j]
                if right:
                    wi[j].update(a + b[1:] for a in left for b in right)
    return w


def nontrivial_subwords(
    word: Union[Word, str],
    gaps: Union[GapSet, Iterable[int]],
    dedup: bool = False,
) -> list[str]:
    """Every subword of length >= 2, sorted lexicographically.

    Cells never hold internal duplicates, but on a non-rainbow word the same
    string can appear in several start/end cells; without dedup it is listed
    once per cell, with dedup identical strings are merged. Rainbow words are
    unaffected by the flag.
    """
    final = warshall_latin(initial_latin_matrix(word, gaps))
    found = [s for row in final for cell in row for s in cell]
    if dedup:
        return sorted(set(found))
    return sorted(found)


def _checked_cells(matrix: SetMatrix) -> SetMatrix:
    rows = [[set(cell) for cell in row] for row in matrix]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("set matrix must be square")
        for j in range(i + 1):
            if row[j]:
                raise ValueError("cells on or below the diagonal must be empty")
    return rows
