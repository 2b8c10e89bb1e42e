"""Exact maximum total size of d disjoint weakly increasing subsequences.

This module is the trusted oracle the rest of the package is checked
against: it never consults row insertion.  A family of disjoint weakly
increasing subsequences is explored exhaustively by assigning each
position of the word to one of ``d`` buckets or leaving it unused.  Only
each bucket's last value matters for feasibility and buckets are
interchangeable, so equivalent assignments are merged through a sorted
bucket-state table; the search stays exact while desk-scale sweeps stay
fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .core import IndexedSubsequence, Word, WordLike, as_word

__all__ = ["DisjointFamily", "greene_sum", "greene_profile", "max_family", "greene_consistency"]


@dataclass(frozen=True)
class DisjointFamily:
    """Pairwise disjoint weakly increasing subsequences of one host word."""

    host: Word
    members: tuple[IndexedSubsequence, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for member in self.members:
            if member.host != self.host:
                raise ValueError("family member lives in a different host word")
            if not member.is_weakly_increasing:
                raise ValueError(f"family member {member.values} is not weakly increasing")
            if seen & set(member.positions):
                raise ValueError("family members must be pairwise disjoint")
            seen |= set(member.positions)

    @property
    def total_size(self) -> int:
        return sum(len(m) for m in self.members)

    def value_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(m.values for m in self.members)


def _ranked(letters: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Compress letters to 1..m preserving order and ties.

    Weakly increasing subsequences are unchanged by any weakly monotone
    relabeling, so the search may run on the compressed alphabet.
    """
    distinct = sorted(set(letters))
    rank = {v: i + 1 for i, v in enumerate(distinct)}
    return tuple(rank[v] for v in letters), len(distinct)


@lru_cache(maxsize=None)
def _bucket_transitions(m: int, d: int):
    """Transition table over sorted bucket states for alphabet 1..m.

    A state is the sorted tuple of each bucket's last value, with 0 for
    an empty bucket.  Placing letter x is legal in any bucket whose last
    value is <= x and replaces that value with x.
    """
    states = list(combinations_with_replacement(range(m + 1), d))
    index = {s: i for i, s in enumerate(states)}
    table = []
    for s in states:
        per_letter = []
        for x in range(1, m + 1):
            succs = []
            for v in sorted(set(s)):
                if v > x:
                    break
                t = list(s)
                t.remove(v)
                t.append(x)
                succs.append(index[tuple(sorted(t))])
            per_letter.append(tuple(dict.fromkeys(succs)))
        table.append(tuple(per_letter))
    return index, tuple(table)


def _max_total(ranked: tuple[int, ...], m: int, d: int) -> int:
    index, table = _bucket_transitions(m, d)
    start = index[(0,) * d]
    dist = {start: 0}
    for x in ranked:
        new = dict(dist)
        for sid, best in dist.items():
            gained = best + 1
            for nsid in table[sid][x - 1]:
                if gained > new.get(nsid, -1):
                    new[nsid] = gained
        dist = new
    return max(dist.values())


def greene_sum(w: WordLike, d: int) -> int:
    """Maximum number of positions covered by at most ``d`` disjoint
    weakly increasing subsequences of ``w``.

    >>> greene_sum(Word((2, 3, 6, 1, 4, 5)), 2)
    6
    """
    if d < 0:
        raise ValueError("d must be non-negative")
    letters = as_word(w).letters
    if d == 0 or not letters:
        return 0
    ranked, m = _ranked(letters)
    return _max_total(ranked, m, min(d, len(letters)))


def greene_profile(w: WordLike) -> tuple[int, ...]:
    """``greene_sum(w, d)`` for d = 0, 1, ... up to saturation.

    The last entry equals ``len(w)``; for any larger ``d`` the maximum
    cannot grow further, so the profile determines every value.
    """
    letters = as_word(w).letters
    profile = [0]
    if not letters:
        return tuple(profile)
    ranked, m = _ranked(letters)
    d = 0
    while profile[-1] < len(letters):
        d += 1
        profile.append(_max_total(ranked, m, d))
    return tuple(profile)


def _max_from_table(ranked: tuple[int, ...], m: int, d: int):
    """Backward table: best additional total from position i in state s."""
    index, table = _bucket_transitions(m, d)
    n = len(ranked)
    maxfrom = [dict() for _ in range(n + 1)]
    maxfrom[n] = {sid: 0 for sid in range(len(table))}
    for i in range(n - 1, -1, -1):
        x = ranked[i]
        nxt = maxfrom[i + 1]
        here = {}
        for sid in range(len(table)):
            best = nxt[sid]
            for nsid in table[sid][x - 1]:
                cand = 1 + nxt[nsid]
                if cand > best:
                    best = cand
            here[sid] = best
        maxfrom[i] = here
    return index, maxfrom


def max_family(w: WordLike, d: int) -> DisjointFamily:
    """A family of ``d`` disjoint weakly increasing subsequences achieving
    ``greene_sum(w, d)``.

    Deterministic: among all optimal assignments of positions to buckets
    (0 meaning unused), the lexicographically smallest vector is chosen.
    Trailing members may be empty.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    word = as_word(w)
    letters = word.letters
    n = len(letters)
    d_eff = min(d, n)
    buckets: list[list[int]] = [[] for _ in range(d)]
    if n > 0:
        ranked, m = _ranked(letters)
        index, maxfrom = _max_from_table(ranked, m, d_eff)
        lasts = [0] * d_eff
        remaining = maxfrom[0][index[tuple(lasts)]]
        for i, x in enumerate(ranked):
            if maxfrom[i + 1][index[tuple(sorted(lasts))]] == remaining:
                continue
            for k in range(d_eff):
                if lasts[k] > x:
                    continue
                saved = lasts[k]
                lasts[k] = x
                if maxfrom[i + 1][index[tuple(sorted(lasts))]] == remaining - 1:
                    buckets[k].append(i)
                    remaining -= 1
                    break
                lasts[k] = saved
            else:
                raise AssertionError("optimal family reconstruction failed")
    members = tuple(IndexedSubsequence(word, tuple(b)) for b in buckets)
    return DisjointFamily(word, members)


def greene_consistency(w: WordLike, d_max: int) -> bool:
    """Whether the oracle agrees with the row-insertion shape of ``w``
    for every number of subsequences up to ``d_max``."""
    from .rsk import shape_of

    word = as_word(w)
    shape = shape_of(word)
    profile = greene_profile(word)
    for d in range(0, d_max + 1):
        actual = profile[d] if d < len(profile) else profile[-1]
        if actual != shape.prefix_sum(d):
            return False
    return True
