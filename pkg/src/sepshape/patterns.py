"""Pattern containment in words and the separability test for permutations.

A word contains a permutation pattern when some index-increasing choice
of letters reproduces the pattern's strict order in both directions;
equal letters therefore never take part in an occurrence.  Separable
permutations are exactly those avoiding 3142 and 2413, equivalently
those whose inversion poset has no induced 4-element "N" subposet.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .core import Permutation, Word, WordLike, as_word

__all__ = [
    "InversionPoset",
    "NotSeparableError",
    "contains_pattern",
    "is_separable",
    "separable_permutations",
    "inversion_poset",
    "has_n_subposet",
]


class NotSeparableError(ValueError):
    """An operation whose guarantee needs separability got a 3142/2413-containing input."""

_PATTERN_3142 = (3, 1, 4, 2)
_PATTERN_2413 = (2, 4, 1, 3)


def _find_occurrence(letters: tuple[int, ...], pattern: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Backtracking search for an occurrence of ``pattern`` in ``letters``.

    Returns the lexicographically first strictly increasing index tuple
    whose letters are order-isomorphic to the pattern, or None.
    """
    m, n = len(pattern), len(letters)
    if m == 0:
        return ()
    if m > n:
        return None
    chosen: list[int] = []

    def extend(slot: int, start: int) -> Optional[tuple[int, ...]]:
        if slot == m:
            return tuple(chosen)
        for i in range(start, n - (m - slot) + 1):
            x = letters[i]
            ok = True
            for k, j in enumerate(chosen):
                y = letters[j]
                if x == y or ((x < y) != (pattern[slot] < pattern[k])):
                    ok = False
                    break
            if ok:
                chosen.append(i)
                found = extend(slot + 1, i + 1)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return extend(0, 0)


def contains_pattern(w: WordLike, pi: Permutation) -> Optional[tuple[int, ...]]:
    """Positions witnessing an occurrence of ``pi`` in ``w``, or None.

    >>> contains_pattern(Word((7, 1, 3, 5, 2, 6, 4)), Permutation((4, 2, 3, 1))) is not None
    True
    >>> contains_pattern(Word((7, 1, 3, 5, 2, 6, 4)), Permutation((3, 4, 1, 2))) is None
    True
    """
    return _find_occurrence(as_word(w).letters, pi.values)


def is_separable(pi: Permutation) -> bool:
    """True iff ``pi`` avoids both 3142 and 2413."""
    letters = pi.values
    return (
        _find_occurrence(letters, _PATTERN_3142) is None
        and _find_occurrence(letters, _PATTERN_2413) is None
    )


def separable_permutations(n: int) -> Iterator[Permutation]:
    """All separable permutations of length ``n``, in lexicographic order."""
    from itertools import permutations as _perms

    for values in _perms(range(1, n + 1)):
        if (
            _find_occurrence(values, _PATTERN_3142) is None
            and _find_occurrence(values, _PATTERN_2413) is None
        ):
            yield Permutation(values)


@dataclass(frozen=True)
class InversionPoset:
    """The points ``(i, pi(i))`` ordered componentwise."""

    points: tuple[tuple[int, int], ...]

    @staticmethod
    def precedes(a: tuple[int, int], b: tuple[int, int]) -> bool:
        return a[0] < b[0] and a[1] < b[1]

    def comparable(self, a: tuple[int, int], b: tuple[int, int]) -> bool:
        return self.precedes(a, b) or self.precedes(b, a)

    def cover_relations(self) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
        """Pairs ``a < b`` with nothing of the poset strictly between."""
        covers = []
        for a in self.points:
            for b in self.points:
                if not self.precedes(a, b):
                    continue
                if any(
                    self.precedes(a, c) and self.precedes(c, b)
                    for c in self.points
                    if c != a and c != b
                ):
                    continue
                covers.append((a, b))
        return tuple(covers)


def inversion_poset(pi: Permutation) -> InversionPoset:
    return InversionPoset(tuple((i, v) for i, v in enumerate(pi.values, 1)))


def _induced_is_n(quad: tuple[tuple[int, int], ...]) -> bool:
    """Whether four poset points induce the 4-element zigzag (fence) poset.

    The target has exactly three comparable pairs b<x, b<a, y<a; its
    degree signature (in, out) over the four elements is therefore
    {(0,2), (2,0), (1,0), (0,1)} with the (0,2) element below the (2,0)
    element.  Induced relations of a poset are transitive already, so the
    signature identifies the zigzag uniquely.
    """
    relations = [
        (i, j)
        for i in range(4)
        for j in range(4)
        if i != j and InversionPoset.precedes(quad[i], quad[j])
    ]
    if len(relations) != 3:
        return False
    out_deg = [0] * 4
    in_deg = [0] * 4
    for i, j in relations:
        out_deg[i] += 1
        in_deg[j] += 1
    signature = sorted(zip(in_deg, out_deg))
    if signature != [(0, 1), (0, 2), (1, 0), (2, 0)]:
        return False
    bottom = next(i for i in range(4) if out_deg[i] == 2)
    top = next(i for i in range(4) if in_deg[i] == 2)
    return (bottom, top) in relations


def has_n_subposet(p: InversionPoset) -> bool:
    """True iff some four points of ``p`` induce the zigzag poset."""
    return any(_induced_is_n(quad) for quad in combinations(p.points, 4))
