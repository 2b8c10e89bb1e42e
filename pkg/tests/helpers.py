"""Independent brute-force oracles and small enumerators used by the tests.

Everything here is deliberately naive: plain recursion and exhaustive
enumeration, kept free of the library's optimized code paths so the two
sides can check each other.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence


def all_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n == 0:
        yield ()
        return
    top = min(n, max_part) if max_part is not None else n
    for first in range(top, 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def standard_tableaux(shape: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All standard fillings of the given shape with 1..n."""
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def fill(entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if entry > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, row in enumerate(rows):
            if len(row) >= shape[i]:
                continue
            if i > 0 and len(rows[i - 1]) <= len(row):
                continue
            row.append(entry)
            yield from fill(entry + 1)
            row.pop()

    yield from fill(1)


def increasing_position_tuples(values: Sequence[int]) -> list[tuple[int, ...]]:
    """Position tuples of all weakly increasing subsequences, empty included."""
    n = len(values)
    out = []
    for mask in range(1 << n):
        pos = [i for i in range(n) if mask >> i & 1]
        vals = [values[i] for i in pos]
        if all(vals[i] <= vals[i + 1] for i in range(len(vals) - 1)):
            out.append(tuple(pos))
    return out


def brute_greene(letters: Sequence[int], d: int) -> int:
    """Maximum total size of d disjoint weakly increasing subsequences,
    by assigning every position to a bucket or skipping it outright."""
    n = len(letters)
    best = 0

    def walk(i: int, lasts: list[int | None], total: int) -> None:
        nonlocal best
        if total + (n - i) <= best:
            return
        if i == n:
            best = max(best, total)
            return
        walk(i + 1, lasts, total)
        x = letters[i]
        for k in range(d):
            if lasts[k] is None or lasts[k] <= x:
                saved = lasts[k]
                lasts[k] = x
                walk(i + 1, lasts, total + 1)
                lasts[k] = saved
                if saved is None:
                    break  # empty buckets are interchangeable

    walk(0, [None] * d, 0)
    return best


def brute_pattern_occurrences(letters: Sequence[int], pattern: Sequence[int]) -> list[tuple[int, ...]]:
    """Every occurrence of the pattern, via full combination enumeration."""
    hits = []
    for pos in combinations(range(len(letters)), len(pattern)):
        vals = [letters[p] for p in pos]
        if len(set(vals)) != len(vals):
            continue
        ok = all(
            (vals[a] < vals[b]) == (pattern[a] < pattern[b])
            for a in range(len(pattern))
            for b in range(len(pattern))
            if a != b
        )
        if ok:
            hits.append(pos)
    return hits
