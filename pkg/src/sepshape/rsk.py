"""Robinson-Schensted-Knuth row insertion and derived objects.

``rsk`` sends a word to its insertion/recording tableau pair by repeated
row insertion; ``shape_of`` is the common shape of that pair.  Reading
words and superstandard fillings connect shapes back to concrete words.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .core import Partition, Tableau, Word, WordLike, as_word

__all__ = ["RskPair", "row_insert", "rsk", "shape_of", "reading_word", "superstandard"]


@dataclass(frozen=True)
class RskPair:
    """Insertion tableau ``p`` and recording tableau ``q`` of equal shape."""

    p: Tableau
    q: Tableau

    def __post_init__(self) -> None:
        if self.p.shape != self.q.shape:
            raise ValueError("tableaux of an insertion pair must share a shape")
        if not self.q.is_standard:
            raise ValueError("recording tableau must be standard")

    @property
    def shape(self) -> Partition:
        return self.p.shape


def _insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert ``x`` into mutable rows; return 0-based (row, col) of the new box.

    At each row the inserted letter either goes at the end (if it is >=
    everything there) or bumps the leftmost strictly greater entry down
    to the next row.
    """
    r = 0
    while r < len(rows):
        row = rows[r]
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return r, pos
        x, row[pos] = row[pos], x
        r += 1
    rows.append([x])
    return r, 0


def row_insert(t: Tableau, x: int) -> tuple[Tableau, int, int]:
    """Insert letter ``x`` into semistandard ``t`` via the bumping chain.

    Returns the resulting tableau together with the 1-based row and
    column of the newly created box.
    """
    if x < 0:
        raise ValueError("letters must be non-negative")
    rows = [list(r) for r in t.rows]
    r, c = _insert(rows, x)
    return Tableau(tuple(tuple(row) for row in rows)), r + 1, c + 1


def rsk(w: WordLike) -> RskPair:
    """The RSK correspondence applied to ``w``.

    Letters are row-inserted left to right; the recording tableau gets
    the 1-based index of each letter in the new box its insertion creates.

    >>> pair = rsk(Word((2, 2, 1, 4, 3, 1, 2)))
    >>> pair.p.rows
    ((1, 1, 2), (2, 2, 3), (4,))
    >>> pair.q.rows
    ((1, 2, 4), (3, 5, 7), (6,))
    """
    word = as_word(w)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for a, x in enumerate(word.letters, 1):
        r, c = _insert(p_rows, x)
        if r == len(q_rows):
            q_rows.append([a])
        else:
            q_rows[r].append(a)
        assert len(q_rows[r]) == c + 1
    return RskPair(
        Tableau(tuple(tuple(row) for row in p_rows)),
        Tableau(tuple(tuple(row) for row in q_rows)),
    )


def shape_of(w: WordLike) -> Partition:
    """The partition shape of the insertion tableau of ``w``."""
    return rsk(w).p.shape


def reading_word(t: Tableau) -> Word:
    """Rows concatenated left to right, bottom row first."""
    letters: list[int] = []
    for row in reversed(t.rows):
        letters.extend(row)
    return Word(tuple(letters))


def superstandard(mu: Partition) -> Tableau:
    """The standard tableau of shape ``mu`` filled rowwise top to bottom.

    >>> superstandard(Partition((3, 3, 2))).rows
    ((1, 2, 3), (4, 5, 6), (7, 8))
    """
    rows = []
    next_entry = 1
    for part in mu.parts:
        rows.append(tuple(range(next_entry, next_entry + part)))
        next_entry += part
    return Tableau(tuple(rows))
