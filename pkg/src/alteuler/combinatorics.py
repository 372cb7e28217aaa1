"""
Permutation statistics and the integer kernels (binomials, Stirling numbers)
used by the explicit coefficient formulas.

Permutations are tuples in one-line notation over 1..n; positions are
one-indexed in the statistic definitions, so ``p[i - 1]`` is pi(i).
"""

from __future__ import annotations

import enum
import itertools
import os
from collections import Counter
from functools import lru_cache
from math import comb
from operator import gt, lt
from typing import Iterator, Sequence

from .errors import BruteForceLimitError
from .poly import Poly

__all__ = [
    "StatKind", "Permutation", "binomial", "stirling2", "stat_count",
    "stat_polynomial", "permutations", "complement", "brute_force_limit",
]

DEFAULT_BRUTE_MAX = 10

Permutation = tuple[int, ...]


class StatKind(enum.Enum):
    DESCENT = "des"
    ALT_DESCENT = "altdes"
    THREE_DESCENT = "3des"
    INTERIOR_PEAK = "peak"


def brute_force_limit() -> int:
    """Largest n for which full enumeration of S_n is allowed."""
    return int(os.environ.get("ALT_EULER_BRUTE_MAX", DEFAULT_BRUTE_MAX))


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k < 0 or k > n (also for negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = k * (prev[k] if k < len(prev) else 0) + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind {n, k}."""
    if n < 0 or k < 0 or k > n:
        return 0
    return _stirling2_row(n)[k]


# -- statistics ---------------------------------------------------------------

def _descents(p: Sequence[int]) -> int:
    return sum(map(gt, p, p[1:]))


def _alt_descents(p: Sequence[int]) -> int:
    # odd positions i count pi(i) > pi(i+1); even positions count pi(i) < pi(i+1)
    odd, even = p[0::2], p[1::2]
    return sum(map(gt, odd, even)) + sum(map(lt, even, odd[1:]))


_THREE_DESCENT_PATTERNS = {(0, 2, 1), (1, 0, 2), (2, 1, 0)}  # 132, 213, 321


def _pattern(a: int, b: int, c: int) -> tuple[int, int, int]:
    ranks = sorted((a, b, c))
    return ranks.index(a), ranks.index(b), ranks.index(c)


def _three_descents(p: Sequence[int]) -> int:
    return sum(
        _pattern(p[i], p[i + 1], p[i + 2]) in _THREE_DESCENT_PATTERNS
        for i in range(len(p) - 2)
    )


def _interior_peaks(p: Sequence[int]) -> int:
    return sum(p[i - 1] < p[i] > p[i + 1] for i in range(1, len(p) - 1))


_COUNTERS = {
    StatKind.DESCENT: _descents,
    StatKind.ALT_DESCENT: _alt_descents,
    StatKind.THREE_DESCENT: _three_descents,
    StatKind.INTERIOR_PEAK: _interior_peaks,
}


def stat_count(p: Sequence[int], stat: StatKind) -> int:
    return _COUNTERS[stat](tuple(p))


def complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def permutations(n: int, restrict_first: bool = False) -> Iterator[Permutation]:
    """Permutations of 1..n in lexicographic order, generated lazily.

    With ``restrict_first`` only those with pi(1) = 1 are produced.
    """
    if restrict_first:
        if n == 0:
            return iter(())
        return ((1,) + rest for rest in itertools.permutations(range(2, n + 1)))
    return itertools.permutations(range(1, n + 1))


def stat_polynomial(n: int, stat: StatKind, restrict_first: bool = False,
                    limit: int | None = None) -> Poly:
    """Distribution polynomial sum over pi of x**stat(pi).

    ``restrict_first`` enumerates {pi in S_n : pi(1) = 1}.  The enumeration
    size is bounded by ``limit`` (default from ALT_EULER_BRUTE_MAX) and the
    bound is checked against the number of free entries.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = brute_force_limit() if limit is None else limit
    free = n - 1 if restrict_first else n
    if free > limit:
        raise BruteForceLimitError(n, limit)
    count = _COUNTERS[stat]
    hist = Counter(map(count, permutations(n, restrict_first)))
    if not hist:
        return Poly()
    return Poly(hist.get(k, 0) for k in range(max(hist) + 1))
