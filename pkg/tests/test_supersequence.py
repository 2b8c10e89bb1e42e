from itertools import permutations, product
from math import isqrt

import pytest

from sepshape.core import Partition, Permutation, Word, partition_contains, partition_union
from sepshape.patterns import NotSeparableError, is_separable
from sepshape.rsk import shape_of
from sepshape.supersequence import (
    BudgetExceededError,
    PermutationSet,
    divisor_count,
    is_supersequence,
    scs_exact,
    separable_witness_for_shape,
    shape_union_bound,
    union_diagram,
    union_diagram_corners,
    union_diagram_size,
    union_family,
)

from helpers import all_partitions

FLAGSHIP = PermutationSet(
    tuple(
        Permutation.parse(s)
        for s in ("123456789", "678912345", "789456123", "978563412", "987654321")
    )
)


class TestIsSupersequence:
    def test_examples(self):
        w = Word.parse("2214312")
        assert is_supersequence(w, Permutation.parse("132"))
        assert not is_supersequence(w, Permutation.parse("321"))
        assert is_supersequence(w, Permutation.parse("312"))
        assert is_supersequence(w, Permutation.parse("213"))

    def test_self(self):
        sigma = Permutation.parse("2413")
        assert is_supersequence(sigma.word, sigma)

    def test_value_exact_not_pattern(self):
        # 45 contains 12 as a pattern but not as a literal subsequence
        assert not is_supersequence(Word((4, 5)), Permutation.parse("12"))

    def test_brute_force_agreement(self):
        def brute(letters, needed):
            n, m = len(letters), len(needed)

            def walk(i, j):
                if j == m:
                    return True
                if i == n:
                    return False
                return walk(i + 1, j + 1) if letters[i] == needed[j] else walk(i + 1, j)

            return walk(0, 0)

        perms = [Permutation(p) for p in permutations((1, 2, 3))]
        for letters in product((1, 2, 3), repeat=5):
            w = Word(letters)
            for sigma in perms:
                assert is_supersequence(w, sigma) == brute(letters, sigma.values)


class TestScsExact:
    def test_single_member(self):
        sigma = Permutation.parse("2413")
        result = scs_exact(PermutationSet((sigma,)))
        assert result.length == 4
        assert result.witness == sigma.word

    def test_empty_set(self):
        result = scs_exact(PermutationSet(()))
        assert result.length == 0 and result.witness.letters == ()

    def test_s3_is_seven(self):
        s3 = PermutationSet(tuple(Permutation(p) for p in permutations((1, 2, 3))))
        result = scs_exact(s3)
        assert result.length == 7 == 3 * 3 - 2 * 3 + 4

    def test_no_shorter_supersequence_for_s3(self):
        s3 = [Permutation(p) for p in permutations((1, 2, 3))]
        for length in range(6 + 1):
            for letters in product((1, 2, 3), repeat=length):
                w = Word(letters)
                assert not all(is_supersequence(w, s) for s in s3)

    def test_flagship_length_and_bound(self):
        result = scs_exact(FLAGSHIP)
        assert result.length == 23
        assert result.lower_bound == 23
        assert result.bound_tight is True
        for member in FLAGSHIP.members:
            assert is_supersequence(result.witness, member)

    def test_witness_is_deterministic_lex_smallest(self):
        members = PermutationSet((Permutation.parse("123"), Permutation.parse("321")))
        result = scs_exact(members)
        assert result.length == 5
        assert result.witness.letters == (1, 2, 3, 2, 1)

    def test_budget(self):
        with pytest.raises(BudgetExceededError, match="exceeds budget"):
            scs_exact(FLAGSHIP, budget=10)

    def test_non_separable_member_has_no_bound(self):
        b = PermutationSet((Permutation.parse("2413"),))
        result = scs_exact(b)
        assert result.length == 4
        assert result.lower_bound is None and result.bound_tight is None


class TestPermutationSet:
    def test_rejects_mixed_lengths(self):
        with pytest.raises(ValueError):
            PermutationSet((Permutation.parse("12"), Permutation.parse("123")))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            PermutationSet((Permutation.parse("12"), Permutation.parse("12")))


class TestShapeUnionBound:
    def test_flagship_shapes_and_bound(self):
        shapes = [shape_of(m).parts for m in FLAGSHIP.members]
        assert shapes == [(9,), (5, 4), (3, 3, 3), (2, 2, 2, 2, 1), (1,) * 9]
        assert shape_union_bound(FLAGSHIP) == 23

    def test_identity_bound(self):
        for n in (1, 4, 7):
            assert shape_union_bound(PermutationSet((Permutation.identity(n),))) == n

    def test_rejects_non_separable_member(self):
        b = PermutationSet((Permutation.parse("1234"), Permutation.parse("2413")))
        with pytest.raises(NotSeparableError, match="2413"):
            shape_union_bound(b)

    def test_bound_below_scs_on_random_separable_sets(self):
        import random

        rng = random.Random(7)
        for n in (4, 5, 6):
            seps = [
                Permutation(p)
                for p in permutations(range(1, n + 1))
                if is_separable(Permutation(p))
            ]
            for _ in range(25):
                members = tuple(rng.sample(seps, rng.randint(1, 3)))
                try:
                    b = PermutationSet(members)
                except ValueError:
                    continue
                assert shape_union_bound(b) <= scs_exact(b).length


class TestUnionDiagram:
    def test_examples(self):
        assert union_diagram(9).parts == (9, 4, 3, 2, 1, 1, 1, 1, 1)
        assert union_diagram(1).parts == (1,)
        assert union_diagram(4).parts == (4, 2, 1, 1)

    def test_equals_brute_force_union(self):
        for n in range(1, 21):
            union = Partition(())
            for parts in all_partitions(n):
                union = partition_union(union, Partition(parts))
            assert union == union_diagram(n)

    def test_nested_with_divisor_growth(self):
        for n in range(1, 1000):
            bigger, smaller = union_diagram(n + 1), union_diagram(n)
            assert partition_contains(bigger, smaller)
            assert bigger.size - smaller.size == divisor_count(n + 1)


class TestUnionDiagramFormulas:
    def test_size_examples(self):
        assert union_diagram_size(1) == 1
        assert union_diagram_size(4) == 8
        assert union_diagram_size(9) == 23

    def test_size_matches_diagram(self):
        for n in range(1, 200):
            assert union_diagram_size(n) == union_diagram(n).size

    def test_size_matches_row_sums_to_ten_thousand(self):
        import numpy as np

        running = 0
        for n in range(1, 10**4 + 1):
            running += divisor_count(n)
            assert running == int((n // np.arange(1, n + 1)).sum())
        assert union_diagram_size(10**4) == running

    def test_corner_examples(self):
        assert union_diagram_corners(9) == 5 == isqrt(37) - 1
        assert union_diagram_corners(1) == 1

    def test_corners_match_distinct_row_lengths(self):
        for n in range(1, 2000):
            assert union_diagram_corners(n) == len(set(union_diagram(n).parts))


class TestSeparableWitness:
    def test_examples(self):
        assert separable_witness_for_shape(Partition((3, 3, 2))).values == (7, 8, 4, 5, 6, 1, 2, 3)
        assert separable_witness_for_shape(Partition((4,))) == Permutation.identity(4)

    def test_shape_and_separability_for_all_small_shapes(self):
        for n in range(1, 9):
            for parts in all_partitions(n):
                lam = Partition(parts)
                sigma = separable_witness_for_shape(lam)
                assert is_separable(sigma)
                assert shape_of(sigma) == lam


class TestUnionFamily:
    def test_flagship_size(self):
        fam = union_family(9)
        assert len(fam) == 5
        assert shape_union_bound(fam) == 23

    def test_singleton(self):
        fam = union_family(1)
        assert [m.values for m in fam.members] == [(1,)]

    def test_covers_diagram_up_to_12(self):
        for n in range(1, 13):
            fam = union_family(n)
            assert len(fam) == union_diagram_corners(n)
            union = Partition(())
            for m in fam.members:
                assert is_separable(m)
                union = partition_union(union, shape_of(m))
            assert union == union_diagram(n)
            assert shape_union_bound(fam) == union_diagram_size(n)
