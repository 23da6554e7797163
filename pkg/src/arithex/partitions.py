"""Integer partitions, multiset coefficients and colored-weight counts.

A partition is kept in compact multiplicity form: a tuple of
``(size, multiplicity)`` pairs with strictly increasing sizes, e.g.
``((1, 3), (2, 1))`` for 1+1+1+2.  Partitions of each n are generated in
lexicographic order of their ascending part lists and memoized, since the
counting recurrences revisit them constantly.

The colored-weights count answers: given ``counts(k)`` colors of weight k
for every k >= 1, in how many ways can multisets of colored weights total
``n`` (repetition allowed)?  Summing over partitions, each part size k
used m times contributes multiset_coeff(counts(k), m) color choices.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Callable, Sequence

Partition = tuple  # tuple[tuple[int, int], ...]: ((size, multiplicity), ...)

CountVector = Callable[[int], int]


def from_prefix(values: Sequence[int]) -> CountVector:
    """Count vector from a finite prefix (1-based sizes); zero beyond it."""
    def counts(k: int) -> int:
        return values[k - 1] if 1 <= k <= len(values) else 0

    return counts


def _ascending_parts(n: int, minimum: int = 1):
    # classic ascending-composition generator; yields part lists in lex order
    if n == 0:
        yield []
        return
    for first in range(minimum, n + 1):
        for rest in _ascending_parts(n - first, first):
            yield [first] + rest


def _compact(parts: list) -> Partition:
    out = []
    for p in parts:
        if out and out[-1][0] == p:
            out[-1][1] += 1
        else:
            out.append([p, 1])
    return tuple((size, mult) for size, mult in out)


@lru_cache(maxsize=None)
def all_partitions(n: int) -> tuple:
    """Every partition of n exactly once, in lexicographic order of the
    ascending part lists; n = 0 gives the single empty partition."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_compact(parts) for parts in _ascending_parts(n))


def partition_count(n: int) -> int:
    return len(all_partitions(n))


def partition_text(partition: Partition) -> str:
    """Compact display, e.g. ``(1^3,2^1)``."""
    inner = ",".join(f"{size}^{mult}" for size, mult in partition)
    return f"({inner})"


def multiset_coeff(n: int, k: int) -> int:
    """Number of k-element multisubsets of an n-element set: C(n+k-1, k)."""
    if k == 0:
        return 1
    if n == 0:
        return 0
    return comb(n + k - 1, k)


def count_weighings(counts: CountVector, total: int) -> int:
    """Multisets of colored weights summing to ``total``; 1 for total = 0."""
    result = 0
    for partition in all_partitions(total):
        product = 1
        for size, mult in partition:
            product *= multiset_coeff(counts(size), mult)
            if not product:
                break
        result += product
    return result


def count_weighings_nontrivial(counts: CountVector, total: int) -> int:
    """Same as count_weighings but excluding the single-weight multiset,
    whose contribution is exactly counts(total)."""
    if total < 1:
        raise ValueError("total must be positive")
    return count_weighings(counts, total) - counts(total)


def weighing_terms(counts: CountVector, total: int, nontrivial: bool = False):
    """Per-partition contributions, for traced breakdowns.

    Yields (partition, factors, value) with one multiset coefficient per
    distinct part size.
    """
    for partition in all_partitions(total):
        if nontrivial and partition == ((total, 1),):
            continue
        factors = tuple(multiset_coeff(counts(size), mult) for size, mult in partition)
        value = 1
        for f in factors:
            value *= f
        yield partition, factors, value
