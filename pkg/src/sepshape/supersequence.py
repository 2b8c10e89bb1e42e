"""Shortest common supersequences of permutation sets and shape bounds.

A supersequence must contain each permutation's actual entries in order
(value-exact, unlike pattern containment).  ``scs_exact`` finds a true
shortest common supersequence by breadth-first search over the lattice of
matched-prefix vectors.  For sets of separable permutations the union of
their shapes is a certified lower bound on that length, and the union of
all Ferrers diagrams of a given size provides ready-made families whose
bound is as large as possible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from math import isqrt
from typing import Optional

from .core import Partition, Permutation, Word, WordLike, as_word, partition_union
from .patterns import NotSeparableError, is_separable
from .rsk import reading_word, shape_of, superstandard

__all__ = [
    "PermutationSet",
    "ScsResult",
    "BudgetExceededError",
    "is_supersequence",
    "scs_exact",
    "shape_union_bound",
    "union_diagram",
    "union_diagram_size",
    "union_diagram_corners",
    "separable_witness_for_shape",
    "union_family",
    "divisor_count",
]

DEFAULT_STATE_BUDGET = 10**8


class BudgetExceededError(ValueError):
    """The product search lattice is larger than the configured budget."""


@dataclass(frozen=True)
class PermutationSet:
    """Distinct permutations of one common length."""

    members: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        lengths = {len(m) for m in self.members}
        if len(lengths) > 1:
            raise ValueError(f"members must share one length, got {sorted(lengths)}")
        seen = set()
        for m in self.members:
            if m.values in seen:
                raise ValueError(f"duplicate member {m}")
            seen.add(m.values)

    @property
    def length(self) -> int:
        return len(self.members[0]) if self.members else 0

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ScsResult:
    """A shortest common supersequence with its optional shape bound."""

    length: int
    witness: Word
    lower_bound: Optional[int] = None
    bound_tight: Optional[bool] = None

    def __post_init__(self) -> None:
        if self.length != len(self.witness):
            raise ValueError("length must equal the witness length")


def is_supersequence(w: WordLike, sigma: Permutation) -> bool:
    """Whether the permutation's entries occur, in order, as letters of ``w``.

    Greedy left-to-right matching is exact here: skipping an available
    match can never help.  Values are compared in the canonical 1-based
    alphabet.
    """
    word = as_word(w)
    need = sigma.values
    pos = 0
    for letter in word.letters:
        if pos < len(need) and letter == need[pos]:
            pos += 1
    return pos == len(need)


def scs_exact(b: PermutationSet, budget: int = DEFAULT_STATE_BUDGET) -> ScsResult:
    """Exact shortest common supersequence of the set.

    Breadth-first search over matched-prefix vectors: a state records how
    much of each member has been matched; appending a letter advances
    every member whose next required entry equals it.  Useless letters
    (advancing nothing) never lie on a shortest path and are skipped.
    Letters are tried in ascending order, so the returned witness is the
    lexicographically smallest optimum.
    """
    members = [m.values for m in b.members]
    k = len(members)
    if k == 0:
        return ScsResult(0, Word(()), lower_bound=0, bound_tight=True)
    n = b.length
    state_space = (n + 1) ** k
    if state_space > budget:
        raise BudgetExceededError(
            f"state space (n+1)^k = {state_space} exceeds budget {budget}"
        )

    start = (0,) * k
    goal = (n,) * k
    parent: dict[tuple[int, ...], Optional[tuple[tuple[int, ...], int]]] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            break
        useful = sorted({members[i][state[i]] for i in range(k) if state[i] < n})
        for letter in useful:
            succ = tuple(
                state[i] + (1 if state[i] < n and members[i][state[i]] == letter else 0)
                for i in range(k)
            )
            if succ not in parent:
                parent[succ] = (state, letter)
                queue.append(succ)

    letters: list[int] = []
    cursor = goal
    while parent[cursor] is not None:
        cursor, letter = parent[cursor]
        letters.append(letter)
    witness = Word(tuple(reversed(letters)))
    assert all(is_supersequence(witness, m) for m in b.members)

    bound = shape_union_bound(b) if all(is_separable(m) for m in b.members) else None
    tight = (bound == len(witness)) if bound is not None else None
    return ScsResult(len(witness), witness, lower_bound=bound, bound_tight=tight)


def shape_union_bound(b: PermutationSet) -> int:
    """Size of the union of the members' shapes: a lower bound on the
    length of any common supersequence.

    Every member must be separable; the bound is unsound otherwise (a
    word can contain a non-separable permutation without containing its
    shape).
    """
    for m in b.members:
        if not is_separable(m):
            raise NotSeparableError(
                f"member {m} is not separable; the shape bound does not apply"
            )
    union = reduce(partition_union, (shape_of(m) for m in b.members), Partition(()))
    return union.size


def union_diagram(n: int) -> Partition:
    """Union of all Ferrers diagrams of size ``n``: row i has ``n // i`` cells.

    >>> union_diagram(9).parts
    (9, 4, 3, 2, 1, 1, 1, 1, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    return Partition(tuple(n // i for i in range(1, n + 1)))


def divisor_count(i: int) -> int:
    """Number of divisors of ``i``."""
    count = 0
    root = isqrt(i)
    for d in range(1, root + 1):
        if i % d == 0:
            count += 2
    if root * root == i:
        count -= 1
    return count


def union_diagram_size(n: int) -> int:
    """Cells in ``union_diagram(n)``, as the divisor summatory function."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(divisor_count(i) for i in range(1, n + 1))


def union_diagram_corners(n: int) -> int:
    """Number of corners (distinct row lengths) of ``union_diagram(n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return isqrt(4 * n + 1) - 1


def _corners(p: Partition) -> list[tuple[int, int]]:
    """(row, length) of each corner cell, rows 1-based, deepest row per length."""
    corners = []
    parts = p.parts
    for i, length in enumerate(parts, 1):
        below = parts[i] if i < len(parts) else 0
        if length > below:
            corners.append((i, length))
    return corners


def separable_witness_for_shape(lam: Partition) -> Permutation:
    """A separable permutation whose shape is exactly ``lam``.

    Reading the rowwise-filled standard tableau of shape ``lam`` bottom
    row first gives a 213-avoiding (hence separable) permutation that row
    insertion maps straight back to that tableau.
    """
    return Permutation(reading_word(superstandard(lam)).letters)


def union_family(n: int) -> PermutationSet:
    """Separable permutations of length ``n`` whose shape union is the
    whole of ``union_diagram(n)``.

    One member per corner (r, c): its shape is c repeated r times padded
    with single cells to total size n.  The family therefore has exactly
    ``union_diagram_corners(n)`` members and realizes the full
    ``union_diagram_size(n)`` lower bound.
    """
    members = []
    for r, c in _corners(union_diagram(n)):
        shape = Partition((c,) * r + (1,) * (n - r * c))
        members.append(separable_witness_for_shape(shape))
    return PermutationSet(tuple(members))
