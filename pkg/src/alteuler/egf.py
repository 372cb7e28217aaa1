"""
Truncated exponential generating functions in z whose coefficients are
polynomials in x with exact rational coefficients.

Entry n of a ``RatSeries`` is the coefficient of z^n/n!, so products are
binomial convolutions.  sec z and tan z are not tabulated: they come out of
one series division of the sin/cos Taylor coefficients.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .poly import Poly
from .report import CheckReport
from .sequences import alt_eulerian_recurrence, derivative_poly

__all__ = [
    "RatSeries", "series_sin", "series_cos", "series_sec", "series_tan",
    "series_sec_tan", "series_substitute_scaled", "series_div",
    "alt_eulerian_egf", "derivative_egf", "check_egf_alt_eulerian",
    "check_egf_derivative", "check_half_angle_identity", "egf_limit",
]

DEFAULT_EGF_MAX = 12


def egf_limit() -> int:
    return int(os.environ.get("ALT_EULER_EGF_MAX", DEFAULT_EGF_MAX))


@dataclass(frozen=True)
class RatSeries:
    """EGF truncated after z^order/order!."""

    order: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"expected {self.order + 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_list(cls, entries: Sequence, order: int) -> RatSeries:
        cs = [e if isinstance(e, Poly) else Poly([e]) for e in entries[:order + 1]]
        cs += [Poly()] * (order + 1 - len(cs))
        return cls(order, tuple(cs))

    @classmethod
    def constant(cls, c, order: int) -> RatSeries:
        return cls.from_list([c], order)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def _check(self, other: RatSeries) -> None:
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: RatSeries) -> RatSeries:
        self._check(other)
        return RatSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RatSeries) -> RatSeries:
        self._check(other)
        return RatSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> RatSeries:
        if isinstance(other, (Poly, int, Fraction)):
            return RatSeries(self.order, tuple(a * other for a in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        return RatSeries(self.order, tuple(
            sum((a[i] * b[n - i] * comb(n, i) for i in range(n + 1)), Poly())
            for n in range(self.order + 1)
        ))

    __rmul__ = __mul__

    def __truediv__(self, other: RatSeries) -> RatSeries:
        return series_div(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def truncate(self, order: int) -> RatSeries:
        return RatSeries(order, self.coeffs[:order + 1])


def series_div(num: RatSeries, den: RatSeries) -> RatSeries:
    """Truncated quotient num/den.

    Solves num = q * den term by term; each step divides by den[0] exactly,
    so den[0] may be any polynomial as long as every division leaves no
    remainder (e.g. den[0] = 1 - x in the alternating Eulerian EGF).
    """
    num._check(den)
    d0 = den[0]
    if d0.is_zero():
        raise ZeroDivisionError("series with zero constant term is not invertible")
    q: list[Poly] = []
    for n in range(num.order + 1):
        acc = num[n] - sum((den[i] * q[n - i] * comb(n, i) for i in range(1, n + 1)), Poly())
        quot, rem = acc.divmod(d0)
        if not rem.is_zero():
            raise ValueError(f"leading coefficient {d0} does not divide the z^{n} term {acc}")
        q.append(quot)
    return RatSeries(num.order, tuple(q))


def series_sin(order: int) -> RatSeries:
    return RatSeries.from_list([(0, 1, 0, -1)[n % 4] for n in range(order + 1)], order)


def series_cos(order: int) -> RatSeries:
    return RatSeries.from_list([(1, 0, -1, 0)[n % 4] for n in range(order + 1)], order)


def series_sec(order: int) -> RatSeries:
    return series_div(RatSeries.constant(1, order), series_cos(order))


def series_tan(order: int) -> RatSeries:
    return series_div(series_sin(order), series_cos(order))


def series_sec_tan(order: int) -> RatSeries:
    """sec z + tan z; its EGF coefficients are the zigzag numbers."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return series_div(RatSeries.constant(1, order) + series_sin(order), series_cos(order))


def series_substitute_scaled(s: RatSeries, factor: Poly) -> RatSeries:
    """Substitute z -> factor * z: entry n is multiplied by factor**n."""
    out, power = [], Poly([1])
    for c in s.coeffs:
        out.append(c * power)
        power = power * factor
    return RatSeries(s.order, tuple(out))


def alt_eulerian_egf(order: int) -> RatSeries:
    """(S - 1) / (1 - x S) with S = sec((1-x)z) + tan((1-x)z)."""
    s = series_substitute_scaled(series_sec_tan(order), Poly([1, -1]))
    one = RatSeries.constant(1, order)
    return series_div(s - one, one - s * Poly([0, 1]))


def derivative_egf(order: int) -> RatSeries:
    """(x + tan z) / (1 - x tan z)."""
    t = series_tan(order)
    x = RatSeries.constant(Poly([0, 1]), order)
    return series_div(x + t, RatSeries.constant(1, order) - t * Poly([0, 1]))


def _order_guard(order: int) -> None:
    limit = egf_limit()
    if order > limit:
        raise ValueError(f"EGF order {order} exceeds ALT_EULER_EGF_MAX={limit}")


def check_egf_alt_eulerian(order: int) -> CheckReport:
    rep = CheckReport("egf-alt")
    _order_guard(order)
    egf = alt_eulerian_egf(order)
    rep.record("n=0", egf[0].is_zero(), n=0, coefficient=egf[0])
    for n in range(1, order + 1):
        expected = alt_eulerian_recurrence(n)
        rep.record(f"n={n}", egf[n] == expected, n=n, series=egf[n], expected=expected)
    return rep


def check_egf_derivative(order: int) -> CheckReport:
    rep = CheckReport("egf-deriv")
    _order_guard(order)
    egf = derivative_egf(order)
    for n in range(order + 1):
        expected = derivative_poly(n)
        rep.record(f"n={n}", egf[n] == expected, n=n, series=egf[n], expected=expected)
    return rep


# -- half-angle identity ------------------------------------------------------
# Bivariate polynomials in (t, x) as {(i, j): coefficient of t^i x^j}.

BiPoly = dict[tuple[int, int], int]


def _bi(terms: dict) -> BiPoly:
    return {k: v for k, v in terms.items() if v}


def _badd(a: BiPoly, b: BiPoly, sign: int = 1) -> BiPoly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return _bi(out)


def _bmul(a: BiPoly, b: BiPoly) -> BiPoly:
    out: dict = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + v1 * v2
    return _bi(out)


def _beval(a: BiPoly, t, x):
    return sum(v * t ** i * x ** j for (i, j), v in a.items())


def _half_angle_forms() -> dict[str, tuple[BiPoly, BiPoly]]:
    """Numerator/denominator pairs of the three stages of the identity."""
    one, t, x = {(0, 0): 1}, {(1, 0): 1}, {(0, 1): 1}
    one_plus_t = _badd(one, t)
    t2 = _bmul(t, t)
    one_minus_t2 = _badd(one, t2, -1)
    # sec = (1+t^2)/(1-t^2), tan = 2t/(1-t^2); multiply through by 1-t^2
    sec_plus_tan_num = _badd(_badd(one, t2), {(1, 0): 2})
    raw = (_badd(sec_plus_tan_num, one_minus_t2, -1),
           _badd(one_minus_t2, _bmul(x, sec_plus_tan_num), -1))
    factored = (_bmul({(1, 0): 2}, one_plus_t),
                _badd(one_minus_t2, _bmul(x, _bmul(one_plus_t, one_plus_t)), -1))
    # 2t / (1 - x - (1+x) t)
    reduced = ({(1, 0): 2}, _bi({(0, 0): 1, (0, 1): -1, (1, 0): -1, (1, 1): -1}))
    return {"substituted": raw, "factored": factored, "reduced": reduced}


def check_half_angle_identity(order: int | None = None) -> CheckReport:
    """Verify the tangent half-angle reduction exactly.

    Formally in (t, x): each stage's fraction equals the next after
    cross-multiplication.  As series in z (up to ``order``): with
    t = tan((1-x)z), the sec/tan form at argument 2(1-x)z equals
    2t / (1 - x - (1+x)t).
    """
    rep = CheckReport("halfangle")
    forms = _half_angle_forms()
    stages = list(forms)
    for a, b in zip(stages, stages[1:]):
        (na, da), (nb, db) = forms[a], forms[b]
        diff = _badd(_bmul(na, db), _bmul(nb, da), -1)
        rep.record(f"{a}={b}", not diff, difference=diff)
    num, den = forms["factored"]
    rep.record("numerator vanishes at t=0",
               _beval(num, 0, Fraction(1, 3)) == 0 and _beval(forms["reduced"][0], 0, Fraction(1, 3)) == 0)

    order = egf_limit() if order is None else order
    one = RatSeries.constant(1, order)
    s2 = series_substitute_scaled(series_sec_tan(order), Poly([2, -2]))
    lhs = series_div(s2 - one, one - s2 * Poly([0, 1]))
    tan1 = series_substitute_scaled(series_tan(order), Poly([1, -1]))
    rhs = series_div(tan1 * 2, one * Poly([1, -1]) - tan1 * Poly([1, 1]))
    rep.record(f"series to order {order}", lhs == rhs, lhs=lhs, rhs=rhs)
    return rep
