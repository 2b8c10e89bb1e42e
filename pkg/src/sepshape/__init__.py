"""Shapes of words under row insertion, separable-permutation pattern
containment, Greene witnesses, and supersequence lower bounds."""

from .core import (
    HostMismatchError,
    IndexedSubsequence,
    ParseError,
    Partition,
    Permutation,
    Tableau,
    Word,
    is_increasing,
    partition_contains,
    partition_union,
    subsequence_union,
)
from .exchange import (
    ContainmentVerdict,
    ExchangeResult,
    VerificationReport,
    exchange_pair,
    extend_disjoint,
    greene_witness,
    theorem_sweep,
    verify_shape_containment,
)
from .greene import DisjointFamily, greene_consistency, greene_profile, greene_sum, max_family
from .patterns import (
    InversionPoset,
    NotSeparableError,
    contains_pattern,
    has_n_subposet,
    inversion_poset,
    is_separable,
    separable_permutations,
)
from .rsk import RskPair, reading_word, row_insert, rsk, shape_of, superstandard
from .supersequence import (
    BudgetExceededError,
    PermutationSet,
    ScsResult,
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

__version__ = "0.1.0"
