"""Constructive subsequence exchange for separable permutations.

Given increasing subsequences u, w, w' of a separable permutation with w
and w' disjoint, ``exchange_pair`` redistributes the positions of w and
w' into two disjoint increasing subsequences alpha and beta with beta
absorbing every element of u that lies in w or w'.  Chaining exchanges
extends any disjoint increasing family by one more member of guaranteed
length (``extend_disjoint``), which in turn yields a family whose member
lengths are exactly the parts of the permutation's shape
(``greene_witness``) and the shape-containment check behind
``verify_shape_containment``.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations
from itertools import product
from multiprocessing import Pool
from typing import Optional, Sequence

from .core import (
    IndexedSubsequence,
    Partition,
    Permutation,
    Word,
    WordLike,
    as_word,
    partition_contains,
)
from .greene import DisjointFamily, max_family
from .patterns import (
    NotSeparableError,
    contains_pattern,
    is_separable,
    separable_permutations,
)
from .rsk import shape_of

__all__ = [
    "ExchangeResult",
    "ContainmentVerdict",
    "VerificationReport",
    "exchange_pair",
    "extend_disjoint",
    "greene_witness",
    "verify_shape_containment",
    "theorem_sweep",
]


@dataclass(frozen=True)
class ExchangeResult:
    """Disjoint increasing subsequences covering the exchanged pair."""

    alpha: IndexedSubsequence
    beta: IndexedSubsequence

    def __post_init__(self) -> None:
        if not self.alpha.is_disjoint(self.beta):
            raise ValueError("alpha and beta must be disjoint")
        if not self.alpha.is_weakly_increasing or not self.beta.is_weakly_increasing:
            raise ValueError("alpha and beta must both be increasing")


def _exchange_positions(
    letters: Sequence[int],
    u_pos: Sequence[int],
    w_pos: Sequence[int],
    w2_pos: Sequence[int],
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Core construction on raw position tuples; no validation.

    Merges w and w' into z, keeps only the part of u inside z, and walks
    the stretches of z between consecutive u-elements.  In each stretch
    the letters falling in the half-open value window between the
    bracketing u-values are scanned for left-to-right maxima; those maxima
    (always including the u-element opening the stretch) form beta, and
    alpha is the rest of z.  Virtual sentinels stand in for the window
    bounds before the first and after the last u-element.
    """
    z = sorted(set(w_pos) | set(w2_pos))
    z_set = set(z)
    u_in = [p for p in u_pos if p in z_set]
    z_index = {p: i for i, p in enumerate(z)}
    bounds = [z_index[p] for p in u_in]

    beta: list[int] = []
    n_seg = len(bounds) + 1
    for j in range(n_seg):
        seg_start = 0 if j == 0 else bounds[j - 1]
        seg_end = bounds[j] if j < len(bounds) else len(z)
        lo = None if j == 0 else letters[z[seg_start]]
        hi = letters[z[bounds[j]]] if j < len(bounds) else None
        best = None
        for i in range(seg_start, seg_end):
            v = letters[z[i]]
            if lo is not None and v < lo:
                continue
            if hi is not None and v >= hi:
                continue
            if best is None or v > best:
                best = v
                beta.append(z[i])
    beta_set = set(beta)
    alpha = tuple(p for p in z if p not in beta_set)
    return alpha, tuple(beta)


@lru_cache(maxsize=65536)
def _separable_values(values: tuple[int, ...]) -> bool:
    return is_separable(Permutation(values))


def _require_separable(sigma: Permutation) -> None:
    if not _separable_values(sigma.values):
        raise NotSeparableError(
            f"permutation {sigma} contains 3142 or 2413; the exchange "
            "construction is only guaranteed for separable permutations"
        )


def exchange_pair(
    sigma: Permutation,
    u: IndexedSubsequence,
    w: IndexedSubsequence,
    w2: IndexedSubsequence,
) -> ExchangeResult:
    """Exchange disjoint increasing ``w``, ``w2`` around ``u``.

    Returns disjoint increasing subsequences alpha, beta with
    ``alpha | beta == w | w2``, ``beta`` containing every element of u
    that lies in ``w | w2``, and ``alpha`` avoiding u entirely.
    """
    host = sigma.word
    for name, sub in (("u", u), ("w", w), ("w2", w2)):
        if sub.host != host:
            raise ValueError(f"{name} is not a subsequence of {sigma}")
        if not sub.is_weakly_increasing:
            raise ValueError(f"{name} must be increasing, got values {sub.values}")
    if not w.is_disjoint(w2):
        raise ValueError("w and w2 must be disjoint")
    _require_separable(sigma)

    alpha_pos, beta_pos = _exchange_positions(host.letters, u.positions, w.positions, w2.positions)
    result = ExchangeResult(
        IndexedSubsequence(host, alpha_pos),
        IndexedSubsequence(host, tuple(sorted(beta_pos))),
    )
    assert set(alpha_pos) | set(beta_pos) == set(w.positions) | set(w2.positions)
    assert not set(alpha_pos) & set(u.positions)
    return result


def _max_disjoint_index(
    v_sets: list[frozenset[int]], s_sets: list[frozenset[int]]
) -> int:
    """Largest m such that members m.. of V avoid members 1..m-1 of S (1-based)."""
    k1 = len(v_sets)
    for m in range(k1, 0, -1):
        if all(
            not (v_sets[j] & s_sets[i]) for i in range(m - 1) for j in range(m - 1, k1)
        ):
            return m
    raise AssertionError("m = 1 is always valid")


def extend_disjoint(sigma: Permutation, family: DisjointFamily) -> IndexedSubsequence:
    """An increasing subsequence disjoint from every family member, of
    length at least the next part of the permutation's shape.

    Starts from a maximum-total family of k+1 disjoint increasing
    subsequences and repeatedly exchanges members against the given ones
    until the last member is disjoint from all of them.
    """
    host = sigma.word
    if family.host != host:
        raise ValueError("family does not live in the given permutation")
    _require_separable(sigma)

    k = len(family.members)
    v = list(max_family(host, k + 1).members)
    s_sets = [frozenset(m.positions) for m in family.members]
    previous_m = 0
    while True:
        v_sets = [frozenset(m.positions) for m in v]
        m = _max_disjoint_index(v_sets, s_sets)
        assert m > previous_m, "exchange stage failed to make progress"
        previous_m = m
        if m == k + 1:
            break
        u = family.members[m - 1]
        u_set = s_sets[m - 1]
        carrier = v[m - 1]
        for j in range(m, k + 1):
            if frozenset(v[j].positions) & u_set:
                swapped = exchange_pair(sigma, u, carrier, v[j])
                v[j] = swapped.alpha
                carrier = swapped.beta
        v[m - 1] = carrier

    result = v[k]
    target = shape_of(sigma).part(k + 1)
    assert len(result) >= target, "extension shorter than the shape guarantees"
    assert all(not (frozenset(result.positions) & s) for s in s_sets)
    return result


def greene_witness(sigma: Permutation, d: int) -> DisjointFamily:
    """Disjoint increasing subsequences whose lengths are exactly the
    parts of the permutation's shape.

    Non-separable input is rejected: the guarantee can genuinely fail
    there (236145 has shape (4,2) but admits no disjoint increasing pair
    of lengths 4 and 2).
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    _require_separable(sigma)
    host = sigma.word
    lam = shape_of(sigma)
    members: list[IndexedSubsequence] = []
    for i in range(1, d + 1):
        target = lam.part(i)
        if target == 0:
            members.append(IndexedSubsequence(host, ()))
            continue
        extension = extend_disjoint(sigma, DisjointFamily(host, tuple(members)))
        members.append(IndexedSubsequence(host, extension.positions[:target]))
    family = DisjointFamily(host, tuple(members))
    assert tuple(len(m) for m in family.members) == tuple(
        lam.part(i) for i in range(1, d + 1)
    )
    return family


@dataclass(frozen=True)
class ContainmentVerdict:
    """Everything the shape-containment check establishes for one pair."""

    word: Word
    sigma: Permutation
    word_shape: Partition
    sigma_shape: Partition
    sigma_separable: bool
    pattern_contained: bool
    shape_contained: bool

    @property
    def hypothesis_applies(self) -> bool:
        return self.sigma_separable and self.pattern_contained

    @property
    def violation(self) -> bool:
        """True only on a soundness failure: hypothesis holds, shapes don't nest."""
        return self.hypothesis_applies and not self.shape_contained


def verify_shape_containment(w: WordLike, sigma: Permutation) -> ContainmentVerdict:
    """Check one instance of shape containment under pattern containment."""
    word = as_word(w)
    word_shape = shape_of(word)
    sigma_shape = shape_of(sigma)
    return ContainmentVerdict(
        word=word,
        sigma=sigma,
        word_shape=word_shape,
        sigma_shape=sigma_shape,
        sigma_separable=is_separable(sigma),
        pattern_contained=contains_pattern(word, sigma) is not None,
        shape_contained=partition_contains(word_shape, sigma_shape),
    )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a sweep of shape-containment instances."""

    instance_count: int
    violations: tuple[ContainmentVerdict, ...]
    elapsed: float

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0


def _sweep_chunk(args) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Worker: return (word letters, sigma values) for each violation."""
    sigma_values, word_chunk = args
    sigmas = [(Permutation(values), shape_of(Word(values))) for values in sigma_values]
    bad = []
    for letters in word_chunk:
        word = Word(letters)
        word_shape = shape_of(word)
        for sigma, sigma_shape in sigmas:
            if contains_pattern(word, sigma) is None:
                continue
            if not partition_contains(word_shape, sigma_shape):
                bad.append((letters, sigma.values))
    return bad


def _enumerate_words(
    word_alphabet: Optional[int],
    word_len: int,
    words_from_permutations: bool,
    sample: Optional[int],
    seed: Optional[int],
) -> list[tuple[int, ...]]:
    if words_from_permutations:
        words = [tuple(p) for p in _permutations(range(1, word_len + 1))]
    elif sample is not None:
        rng = random.Random(seed)
        words = [
            tuple(rng.randint(1, word_alphabet) for _ in range(word_len))
            for _ in range(sample)
        ]
    else:
        words = [tuple(p) for p in product(range(1, word_alphabet + 1), repeat=word_len)]
    return words


def theorem_sweep(
    sigma_len: int,
    word_len: int,
    word_alphabet: Optional[int] = None,
    words_from_permutations: bool = False,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
) -> VerificationReport:
    """Exhaustively check shape containment for every separable pattern of
    the given length against a space of words.

    Words are all of ``{1..word_alphabet}^word_len`` by default, all
    permutations of that length with ``words_from_permutations``, or a
    seeded random sample of ``sample`` words.  ``jobs`` controls worker
    processes (default: machine parallelism); totals are independent of
    the worker split.
    """
    if not words_from_permutations and word_alphabet is None:
        raise ValueError("word_alphabet is required unless sweeping permutations")
    start = time.perf_counter()
    sigma_values = [p.values for p in separable_permutations(sigma_len)]
    words = _enumerate_words(word_alphabet, word_len, words_from_permutations, sample, seed)

    jobs = jobs or os.cpu_count() or 1
    jobs = max(1, min(jobs, len(words)))
    if jobs == 1:
        raw = _sweep_chunk((sigma_values, words))
    else:
        chunk = (len(words) + jobs - 1) // jobs
        parts = [words[i : i + chunk] for i in range(0, len(words), chunk)]
        with Pool(jobs) as pool:
            raw = [
                hit
                for sub in pool.map(_sweep_chunk, [(sigma_values, p) for p in parts])
                for hit in sub
            ]
    violations = tuple(
        verify_shape_containment(Word(letters), Permutation(values))
        for letters, values in raw
    )
    elapsed = time.perf_counter() - start
    return VerificationReport(len(words) * len(sigma_values), violations, elapsed)
