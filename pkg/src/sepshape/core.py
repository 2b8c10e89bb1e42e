"""Fundamental value types for word/tableau combinatorics.

Words are finite sequences of non-negative integer letters.  Permutations
are words that are bijections on a contiguous integer range; they accept
0-based or 1-based input and are normalized internally to a 1-based
alphabet (the input base is kept for display).  Partitions are weakly
decreasing sequences of positive parts.  Subsequences are identified by
their position sets inside a host word, so repeated letters and set
algebra (union, intersection, disjointness) behave correctly.

All values are immutable; every operation here is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

__all__ = [
    "Word",
    "Permutation",
    "Partition",
    "Tableau",
    "IndexedSubsequence",
    "ParseError",
    "HostMismatchError",
    "parse_word",
    "parse_permutation",
    "parse_partition",
    "partition_contains",
    "partition_union",
    "subsequence_union",
    "is_increasing",
]


class ParseError(ValueError):
    """Malformed textual input for a word, permutation, or partition."""


class HostMismatchError(ValueError):
    """Two indexed subsequences were combined across different host words."""


_EXT_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_EXT_VALUE = {c: i for i, c in enumerate(_EXT_DIGITS)}
_SEPARATORS = re.compile(r"[,\s]")


def _parse_letters(text: str) -> tuple[int, ...]:
    """Parse the textual form of a word.

    Two forms are accepted: a compact digit string using extended digits
    (``a`` = 10 ... ``z`` = 35), or comma/space-separated integers.  The
    compact form applies only when no separator occurs in the input;
    mixing the two forms is rejected.

    >>> _parse_letters("10652438ba97")
    (1, 0, 6, 5, 2, 4, 3, 8, 11, 10, 9, 7)
    >>> _parse_letters("12, 10, 3")
    (12, 10, 3)
    """
    text = text.strip()
    if _SEPARATORS.search(text):
        letters = []
        for token in re.split(r"[,\s]+", text):
            if not token:
                continue
            if not token.isdigit():
                raise ParseError(f"bad letter {token!r} in separated form")
            letters.append(int(token))
        return tuple(letters)
    if not text:
        return ()
    try:
        return tuple(_EXT_VALUE[c] for c in text)
    except KeyError as exc:
        raise ParseError(f"bad compact digit {exc.args[0]!r} in {text!r}") from None


def _format_letters(letters: Sequence[int]) -> str:
    """Inverse of :func:`_parse_letters`; the result always round-trips."""
    if not letters:
        return ""
    if all(0 <= v < 36 for v in letters):
        return "".join(_EXT_DIGITS[v] for v in letters)
    if len(letters) == 1:
        # A lone multi-digit token would re-parse as compact digits.
        return f"{letters[0]},"
    return ",".join(str(v) for v in letters)


@dataclass(frozen=True)
class Word:
    """A finite sequence of non-negative integer letters, possibly empty."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if any(v < 0 for v in self.letters):
            raise ValueError(f"letters must be non-negative: {self.letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i: int) -> int:
        return self.letters[i]

    def __str__(self) -> str:
        return _format_letters(self.letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls(_parse_letters(text))

    def subsequence(self, positions: Iterable[int]) -> "IndexedSubsequence":
        return IndexedSubsequence(self, tuple(positions))

    def full_subsequence(self) -> "IndexedSubsequence":
        return IndexedSubsequence(self, tuple(range(len(self.letters))))


WordLike = Union[Word, "Permutation", Sequence[int]]


def as_word(w: WordLike) -> Word:
    """Coerce a word, permutation, or plain letter sequence to a Word."""
    if isinstance(w, Word):
        return w
    if isinstance(w, Permutation):
        return w.word
    return Word(tuple(w))


@dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation, normalized to a 1-based alphabet.

    Input values may form a bijection on ``{0..n-1}`` or ``{1..n}``; the
    0-based form is normalized up by one and the original base is kept so
    displays can round-trip exactly.
    """

    values: tuple[int, ...]
    base: int = field(init=False, default=1)

    def __post_init__(self) -> None:
        values = tuple(self.values)
        n = len(values)
        base = 0 if 0 in values else 1
        if sorted(values) != list(range(base, base + n)):
            raise ValueError(f"not a permutation of a contiguous range: {values}")
        object.__setattr__(self, "values", tuple(v + 1 - base for v in values))
        object.__setattr__(self, "base", base)

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Value at 1-based position ``i`` (normalized alphabet)."""
        return self.values[i - 1]

    def __str__(self) -> str:
        return _format_letters(self.display_values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        letters = _parse_letters(text)
        if not letters:
            raise ParseError("a permutation cannot be empty")
        return cls(letters)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def word(self) -> Word:
        """The normalized (1-based) one-line word."""
        return Word(self.values)

    @property
    def display_values(self) -> tuple[int, ...]:
        """Values shifted back to the alphabet the permutation was given in."""
        return tuple(v - 1 + self.base for v in self.values)

    def subsequence(self, positions: Iterable[int]) -> "IndexedSubsequence":
        return IndexedSubsequence(self.word, tuple(positions))

    def subsequence_of_letters(self, letters: Union[str, Iterable[int]]) -> "IndexedSubsequence":
        """Subsequence made of the given letters of the display alphabet.

        Convenient for naming subsequences by value, e.g. ``"048b"`` inside
        the permutation written ``10652438ba97``.
        """
        wanted = _parse_letters(letters) if isinstance(letters, str) else tuple(letters)
        display = self.display_values
        positions = []
        for v in wanted:
            try:
                positions.append(display.index(v))
            except ValueError:
                raise ValueError(f"letter {v} does not occur in {self}") from None
        return IndexedSubsequence(self.word, tuple(sorted(positions)))

    def display_letters(self, sub: "IndexedSubsequence") -> tuple[int, ...]:
        """Letters of ``sub`` mapped back to the display alphabet."""
        if sub.host != self.word:
            raise HostMismatchError("subsequence does not belong to this permutation")
        return tuple(v - 1 + self.base for v in sub.values)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are never stored."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(p for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must weakly decrease: {self.parts}")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(t) for t in re.split(r"[,\s]+", text) if t))
        except ValueError as exc:
            raise ParseError(f"bad partition {text!r}") from exc

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The ``i``-th part, 1-based; missing parts read as zero."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def prefix_sum(self, d: int) -> int:
        """Sum of the first ``d`` parts (missing parts count zero)."""
        return sum(self.parts[: max(d, 0)])


def partition_contains(outer: Partition, inner: Partition) -> bool:
    """True iff every part of ``inner`` fits inside the same part of ``outer``."""
    return len(inner.parts) <= len(outer.parts) and all(
        inner.parts[i] <= outer.parts[i] for i in range(len(inner.parts))
    )


def partition_union(a: Partition, b: Partition) -> Partition:
    """Union of Ferrers diagrams: rowwise maximum of parts.

    >>> str(partition_union(Partition((5, 4)), Partition((3, 3, 3))))
    '5,4,3'
    """
    rows = max(len(a.parts), len(b.parts))
    return Partition(tuple(max(a.part(i), b.part(i)) for i in range(1, rows + 1)))


@dataclass(frozen=True)
class Tableau:
    """A row-filled Ferrers diagram, semistandard by construction.

    Rows weakly increase left to right and columns strictly increase top
    to bottom; construction rejects anything else.  ``is_standard`` checks
    additionally that the entries are exactly 1..size, each once.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows if len(r) > 0)
        object.__setattr__(self, "rows", rows)
        lengths = [len(r) for r in rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(rows) - 1)):
            raise ValueError("row lengths must weakly decrease")
        for r in rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                raise ValueError(f"row {r} is not weakly increasing")
        for i in range(len(rows) - 1):
            upper, lower = rows[i], rows[i + 1]
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def is_standard(self) -> bool:
        entries = sorted(v for r in self.rows for v in r)
        return entries == list(range(1, self.size + 1))

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows)


@dataclass(frozen=True)
class IndexedSubsequence:
    """A subsequence of a host word, identified by its position set.

    Positions are 0-based, strictly increasing and within bounds.  Two
    subsequences of the same host are disjoint iff their position sets
    are; value multisets play no role, so repeated letters are handled
    correctly.
    """

    host: Word
    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        pos = tuple(self.positions)
        object.__setattr__(self, "positions", pos)
        n = len(self.host)
        if any(p < 0 or p >= n for p in pos):
            raise ValueError(f"positions out of range for host of length {n}: {pos}")
        if any(pos[i] >= pos[i + 1] for i in range(len(pos) - 1)):
            raise ValueError(f"positions must strictly increase: {pos}")

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def values(self) -> tuple[int, ...]:
        letters = self.host.letters
        return tuple(letters[p] for p in self.positions)

    @property
    def is_weakly_increasing(self) -> bool:
        v = self.values
        return all(v[i] <= v[i + 1] for i in range(len(v) - 1))

    @property
    def is_strictly_increasing(self) -> bool:
        v = self.values
        return all(v[i] < v[i + 1] for i in range(len(v) - 1))

    def _check_host(self, other: "IndexedSubsequence") -> None:
        if self.host != other.host:
            raise HostMismatchError("subsequences live in different host words")

    def is_disjoint(self, other: "IndexedSubsequence") -> bool:
        self._check_host(other)
        return not set(self.positions) & set(other.positions)

    def union(self, other: "IndexedSubsequence") -> "IndexedSubsequence":
        self._check_host(other)
        return IndexedSubsequence(self.host, tuple(sorted(set(self.positions) | set(other.positions))))

    def intersection(self, other: "IndexedSubsequence") -> "IndexedSubsequence":
        self._check_host(other)
        return IndexedSubsequence(self.host, tuple(sorted(set(self.positions) & set(other.positions))))

    def difference(self, other: "IndexedSubsequence") -> "IndexedSubsequence":
        self._check_host(other)
        return IndexedSubsequence(self.host, tuple(sorted(set(self.positions) - set(other.positions))))

    def __or__(self, other: "IndexedSubsequence") -> "IndexedSubsequence":
        return self.union(other)


def subsequence_union(a: IndexedSubsequence, b: IndexedSubsequence) -> IndexedSubsequence:
    """Set union of two subsequences of the same host word."""
    return a.union(b)


def is_increasing(s: IndexedSubsequence, strict: bool = False) -> bool:
    """Whether the value sequence increases (weakly by default)."""
    return s.is_strictly_increasing if strict else s.is_weakly_increasing


def parse_word(text: str) -> Word:
    return Word.parse(text)


def parse_permutation(text: str) -> Permutation:
    return Permutation.parse(text)


def parse_partition(text: str) -> Partition:
    return Partition.parse(text)
