"""
Polynomial families: derivative polynomials P_n, alternating Eulerian
polynomials Â_n, peak polynomials W_n, classical Eulerian polynomials A_n
and the companions P̃_n(x) = i**(n-1) P_n(i x).

Each family has a recurrence route; Â_n additionally has the Möbius
transform of P_n and an explicit coefficient formula, and P_n has an
explicit Stirling-number formula for its coefficients.  Row generators are
memoized; cached rows are immutable so concurrent readers are safe.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .combinatorics import StatKind, binomial, stat_polynomial, stirling2
from .errors import InvariantViolation
from .poly import Poly, mobius_clear

__all__ = [
    "Family", "FamilyRow", "derivative_poly", "derivative_coeff_recurrence",
    "derivative_coeff_explicit", "alt_eulerian_recurrence",
    "alt_eulerian_transform", "alt_eulerian_coeff_explicit",
    "alt_eulerian_explicit", "e_coeff", "e_coeff_closed", "e_coeff_printed",
    "peak_poly", "classical_eulerian", "classical_eulerian_brute",
    "tilde_p", "tilde_p_recurrence", "generate",
]

_ONE_PLUS_X2 = Poly([1, 0, 1])


class Family(enum.Enum):
    CLASSICAL_EULERIAN = "eulerian"
    ALT_EULERIAN = "alt-eulerian"
    DERIVATIVE = "derivative"
    PEAK = "peak"
    TILDE_P = "tilde-p"


@dataclass(frozen=True)
class FamilyRow:
    family: Family
    n: int
    poly: Poly
    route: str


def _check_n(n: int, lo: int) -> None:
    if n < lo:
        raise ValueError(f"n must be >= {lo}, got {n}")


# -- derivative polynomials ---------------------------------------------------

@lru_cache(maxsize=None)
def derivative_poly(n: int) -> Poly:
    """P_n from P_0 = x and P_{n+1} = (1 + x^2) P_n'."""
    _check_n(n, 0)
    if n == 0:
        return Poly([0, 1])
    return _ONE_PLUS_X2 * derivative_poly(n - 1).derivative()


@lru_cache(maxsize=None)
def _p_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0, 1)
    prev = _p_row(n - 1)

    def at(k):
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple((k + 1) * at(k + 1) + (k - 1) * at(k - 1) for k in range(n + 2))


def derivative_coeff_recurrence(n: int, k: int) -> int:
    """p(n, k) from p(n,k) = (k+1) p(n-1,k+1) + (k-1) p(n-1,k-1), p(0,1) = 1."""
    if n < 0 or k < 0 or k > n + 1:
        return 0
    return _p_row(n)[k]


def derivative_coeff_explicit(n: int, k: int) -> int:
    """p(n, n-2k+1) by the alternating Stirling-number sum.

    (-1)^k sum_{i>=1} i! {n,i} (-2)^(n-i) [C(i, n-2k) - C(i, n-2k+1)]
    """
    if n < 1:
        raise ValueError("the explicit formula needs n >= 1")
    if not 0 <= k <= (n + 1) // 2:
        raise ValueError(f"k must lie in [0, {(n + 1) // 2}] for n={n}, got {k}")
    j = n - 2 * k
    total = sum(
        factorial(i) * stirling2(n, i) * (-2) ** (n - i) * (binomial(i, j) - binomial(i, j + 1))
        for i in range(1, n + 1)
    )
    return -total if k % 2 else total


# -- alternating Eulerian polynomials -----------------------------------------

@lru_cache(maxsize=None)
def alt_eulerian_recurrence(n: int) -> Poly:
    """Â_n from Â_1 = 1 and
    2 Â_{n+1} = (1 + n + 2x + (n-1)x^2) Â_n + (1-x)(1+x^2) Â_n'."""
    _check_n(n, 1)
    if n == 1:
        return Poly([1])
    m = n - 1
    a = alt_eulerian_recurrence(m)
    rhs = Poly([1 + m, 2, m - 1]) * a + Poly([1, -1, 1, -1]) * a.derivative()
    return rhs.exact_div(2)


@lru_cache(maxsize=None)
def alt_eulerian_transform(n: int) -> Poly:
    """Â_n as (1-x)^(n+1) P_n((1+x)/(1-x)) divided by 2^n (1+x^2)."""
    _check_n(n, 1)
    cleared = mobius_clear(derivative_poly(n), n + 1)
    return cleared.exact_div(_ONE_PLUS_X2).exact_div(2 ** n)


def e_coeff(n: int, k: int, s: int) -> int:
    """Coefficient of x^s in (1-x)^(2k) (1+x)^(n-2k), by expansion."""
    if not 0 <= 2 * k <= n:
        raise ValueError(f"need 0 <= 2k <= n, got n={n}, k={k}")
    return _e_poly(n, k)[s]


@lru_cache(maxsize=None)
def _e_poly(n: int, k: int) -> Poly:
    return Poly([1, -1]) ** (2 * k) * Poly([1, 1]) ** (n - 2 * k)


def e_coeff_closed(n: int, k: int, s: int) -> int:
    """Closed sum for E(n,k,s) with upper limit min(2k, s)."""
    return sum((-1) ** j * binomial(2 * k, j) * binomial(n - 2 * k, s - j)
               for j in range(min(2 * k, s) + 1))


def e_coeff_printed(n: int, k: int, s: int) -> int:
    """The same sum truncated at min(floor(k/2), s); kept to show it disagrees
    with the expansion (e.g. at n=4, k=1, s=2)."""
    return sum((-1) ** j * binomial(2 * k, j) * binomial(n - 2 * k, s - j)
               for j in range(min(k // 2, s) + 1))


def alt_eulerian_coeff_explicit(n: int, s: int) -> int:
    """Coefficient of x^s in Â_{n+1}:

    2^-n sum_k (n-2k+1) p(n, n-2k+1) E(n,k,s).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0 <= s <= n:
        raise ValueError(f"s must lie in [0, {n}], got {s}")
    total = 0
    for k in range((n + 1) // 2 + 1):
        weight = n - 2 * k + 1
        if weight == 0:
            continue
        total += weight * derivative_coeff_recurrence(n, n - 2 * k + 1) * e_coeff(n, k, s)
    q, r = divmod(total, 2 ** n)
    if r:
        raise InvariantViolation(f"explicit sum for Â({n + 1},{s}) is not divisible by 2^{n}")
    return q


def alt_eulerian_explicit(n: int) -> Poly:
    """Â_n assembled from alt_eulerian_coeff_explicit."""
    _check_n(n, 1)
    return Poly(alt_eulerian_coeff_explicit(n - 1, s) for s in range(n))


# -- peak, classical Eulerian and companion polynomials -----------------------

@lru_cache(maxsize=None)
def peak_poly(n: int) -> Poly:
    """W_n from W_1 = 1 and W_{n+1} = (nx - x + 2) W_n + 2x(1-x) W_n'."""
    _check_n(n, 1)
    if n == 1:
        return Poly([1])
    m = n - 1
    w = peak_poly(m)
    return Poly([2, m - 1]) * w + Poly([0, 2, -2]) * w.derivative()


@lru_cache(maxsize=None)
def classical_eulerian(n: int) -> Poly:
    """A_n from A_1 = 1 and A_{n+1} = (1 + nx) A_n + x(1-x) A_n'."""
    _check_n(n, 1)
    if n == 1:
        return Poly([1])
    m = n - 1
    a = classical_eulerian(m)
    return Poly([1, m]) * a + Poly([0, 1, -1]) * a.derivative()


def classical_eulerian_brute(n: int) -> Poly:
    _check_n(n, 1)
    return stat_polynomial(n, StatKind.DESCENT)


@lru_cache(maxsize=None)
def tilde_p(n: int) -> Poly:
    """P̃_n(x) = i^(n-1) P_n(ix), by re-signing the coefficients of P_n.

    p(n,k) vanishes unless n-1+k is even, so i^(n-1+k) is a real sign.
    """
    _check_n(n, 0)
    p = derivative_poly(n)
    out = []
    for k, c in enumerate(p.coeffs):
        if c and (n - 1 + k) % 2:
            raise InvariantViolation(f"P_{n} has a coefficient of the wrong parity at x^{k}")
        out.append(c if ((n - 1 + k) // 2) % 2 == 0 else -c)
    return Poly(out)


@lru_cache(maxsize=None)
def tilde_p_recurrence(n: int) -> Poly:
    """P̃_n from P̃_0 = x and P̃_{n+1} = (1 - x^2) P̃_n'."""
    _check_n(n, 0)
    if n == 0:
        return Poly([0, 1])
    return Poly([1, 0, -1]) * tilde_p_recurrence(n - 1).derivative()


_GENERATORS = {
    Family.CLASSICAL_EULERIAN: (classical_eulerian, 1, "recurrence"),
    Family.ALT_EULERIAN: (alt_eulerian_recurrence, 1, "recurrence"),
    Family.DERIVATIVE: (derivative_poly, 0, "recurrence"),
    Family.PEAK: (peak_poly, 1, "recurrence"),
    Family.TILDE_P: (tilde_p, 0, "reindexed-derivative"),
}


def generate(family: Family | str, n: int) -> FamilyRow:
    family = Family(family)
    fn, lo, route = _GENERATORS[family]
    _check_n(n, lo)
    return FamilyRow(family, n, fn(n), route)
