import itertools
from math import factorial

import pytest

from alteuler.combinatorics import (
    StatKind, binomial, complement, permutations, stat_count, stat_polynomial, stirling2,
)
from alteuler.errors import BruteForceLimitError
from alteuler.poly import Poly


def pascal(n_max):
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [0]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, n + 1)])
    return rows


def set_partition_counts(n):
    """{n,k} by enumerating restricted growth strings."""
    counts = [0] * (n + 1)

    def rec(prefix, blocks):
        if len(prefix) == n:
            counts[blocks] += 1
            return
        for b in range(blocks + 1):
            rec(prefix + [b], max(blocks, b + 1))

    if n == 0:
        return [1]
    rec([], 0)
    return counts


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(10, 5) == 252


def test_binomial_matches_pascal():
    rows = pascal(20)
    for n, row in enumerate(rows):
        for k, v in enumerate(row):
            assert binomial(n, k) == v


def test_stirling_examples():
    assert all(stirling2(n, 1) == 1 for n in range(1, 12))
    assert all(stirling2(n, n) == 1 for n in range(12))
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(3, 5) == 0


@pytest.mark.parametrize("n", range(0, 9))
def test_stirling_matches_set_partitions(n):
    assert [stirling2(n, k) for k in range(n + 1)] == set_partition_counts(n)


def test_stat_examples():
    assert stat_count((1, 2), StatKind.ALT_DESCENT) == 0
    assert stat_count((2, 1), StatKind.ALT_DESCENT) == 1
    assert stat_count((2, 1, 4, 3), StatKind.ALT_DESCENT) == 3
    assert stat_count((1, 3, 2), StatKind.INTERIOR_PEAK) == 1
    assert stat_count((3, 2, 1), StatKind.DESCENT) == 2
    assert stat_count((1, 2), StatKind.THREE_DESCENT) == 0


def _altdes_by_definition(p):
    n = len(p)
    even = {2 * i for i in range(1, n) if 2 * i + 1 <= n and p[2 * i - 1] < p[2 * i]}
    odd = {2 * i + 1 for i in range(0, n) if 2 * i + 2 <= n and p[2 * i] > p[2 * i + 1]}
    return len(even | odd)


@pytest.mark.parametrize("n", range(1, 7))
def test_altdes_matches_set_definition(n):
    for p in itertools.permutations(range(1, n + 1)):
        assert stat_count(p, StatKind.ALT_DESCENT) == _altdes_by_definition(p)


def test_three_descent_patterns():
    for p, expected in [((1, 3, 2), 1), ((2, 1, 3), 1), ((3, 2, 1), 1),
                        ((1, 2, 3), 0), ((2, 3, 1), 0), ((3, 1, 2), 0)]:
        assert stat_count(p, StatKind.THREE_DESCENT) == expected


def test_stat_polynomial_examples():
    assert stat_polynomial(4, StatKind.ALT_DESCENT) == Poly([5, 7, 7, 5])
    assert stat_polynomial(3, StatKind.INTERIOR_PEAK) == Poly([4, 2])
    assert stat_polynomial(1, StatKind.ALT_DESCENT) == Poly([1])


@pytest.mark.parametrize("stat", list(StatKind))
def test_total_mass_is_factorial(stat):
    for n in range(1, 10):
        assert stat_polynomial(n, stat)(1) == factorial(n)


def test_complement_reverses_altdes():
    for n in range(1, 9):
        for p in permutations(n):
            assert stat_count(p, StatKind.ALT_DESCENT) + stat_count(complement(p), StatKind.ALT_DESCENT) == n - 1


@pytest.mark.parametrize("n", range(1, 9))
def test_equidistribution_with_three_descents(n):
    assert stat_polynomial(n, StatKind.ALT_DESCENT) == \
        stat_polynomial(n + 1, StatKind.THREE_DESCENT, restrict_first=True)


def test_restrict_first_enumerates_fixed_first_entry():
    perms = list(permutations(4, restrict_first=True))
    assert len(perms) == 6 and all(p[0] == 1 for p in perms)
    assert perms == sorted(perms)


def test_enumeration_is_lexicographic():
    perms = list(permutations(4))
    assert perms == sorted(perms) and len(perms) == 24


def test_limit_enforced(monkeypatch):
    with pytest.raises(BruteForceLimitError, match="n <= 10"):
        stat_polynomial(11, StatKind.DESCENT)
    monkeypatch.setenv("ALT_EULER_BRUTE_MAX", "5")
    with pytest.raises(BruteForceLimitError):
        stat_polynomial(6, StatKind.DESCENT)
    assert stat_polynomial(6, StatKind.DESCENT, restrict_first=True)(1) == 120
