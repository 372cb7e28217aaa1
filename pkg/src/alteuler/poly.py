"""
Dense univariate polynomials with exact coefficients.

Coefficients are stored low degree first.  They are Python ``int`` for
integer polynomials and ``fractions.Fraction`` for rational ones; both are
arbitrary precision so no operation here can overflow or round.  The zero
polynomial has an empty coefficient tuple.

>>> p = Poly([1, 1])
>>> p * p
Poly([1, 2, 1])
>>> mobius_clear(Poly([0, 1]), 1)
Poly([1, 1])
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Union

from .errors import InvariantViolation

__all__ = [
    "Poly", "IntPolynomial", "RatPolynomial", "X", "ONE", "ZERO",
    "poly_add", "poly_mul", "poly_derivative", "mobius_clear",
    "poly_eval_float", "binomial_power",
]

Coeff = Union[int, Fraction]


def _canon(c) -> Coeff:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _canon(Fraction(c.numerator, c.denominator))
    raise TypeError(f"polynomial coefficients must be exact rationals, got {type(c).__name__}")


class Poly:
    """Immutable dense polynomial over the integers or rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def monomial(cls, k: int, c: Coeff = 1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: Coeff) -> Poly:
        return cls([c])

    # -- basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Coeff:
        """Coefficient of x**k; zero outside the stored range."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def reversed(self) -> Poly:
        return Poly(self.coeffs[::-1])

    def norm1(self) -> Coeff:
        return sum(abs(c) for c in self.coeffs)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = Poly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Long division over the rationals; quotient stays integral when the
        divisor is monic up to sign and the dividend is integral."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead = d[-1]
        if len(rem) < len(d):
            return Poly(), self
        quot = [0] * (len(rem) - len(d) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(d) - 1]
            if c:
                q = c // lead if isinstance(c, int) and isinstance(lead, int) and c % lead == 0 else Fraction(c) / lead
                quot[i] = q
                for j, dc in enumerate(d):
                    rem[i + j] -= q * dc
        return Poly(quot), Poly(rem)

    def exact_div(self, divisor: Union[Poly, int]) -> Poly:
        """Quotient of an exact division; any remainder raises InvariantViolation."""
        if isinstance(divisor, int):
            if divisor == 0:
                raise ZeroDivisionError("division by zero")
            if not self.is_integral():
                return Poly(Fraction(c) / divisor for c in self.coeffs)
            if any(c % divisor for c in self.coeffs):
                raise InvariantViolation(f"{self} is not divisible by {divisor}")
            return Poly(c // divisor for c in self.coeffs)
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InvariantViolation(f"{self} is not divisible by {divisor} (remainder {r})")
        return q

    def __call__(self, x):
        """Horner evaluation in whatever arithmetic ``x`` carries."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    # -- comparison and display -----------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                pw = var if k == 1 else f"{var}^{k}"
                term = pw if mag == 1 else f"{mag}*{pw}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def _coerce(other):
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly([other])
    return NotImplemented


# Public names; both families share one representation.
IntPolynomial = Poly
RatPolynomial = Poly

X = Poly([0, 1])
ONE = Poly([1])
ZERO = Poly()


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def binomial_power(a: int, b: int, m: int) -> Poly:
    """Coefficients of (a + b*x)**m by the binomial theorem."""
    return Poly(comb(m, j) * a ** (m - j) * b ** j for j in range(m + 1))


def mobius_clear(p: Poly, m: int) -> Poly:
    """Return (1-x)**m * p((1+x)/(1-x)) as an exact polynomial.

    Accumulates sum_k p_k (1+x)**k (1-x)**(m-k); requires m >= deg p so the
    denominator clears.
    """
    if p.is_zero():
        return Poly()
    if m < p.degree:
        raise ValueError(f"m={m} is smaller than deg p={p.degree}; the denominator does not clear")
    plus = [Poly([1])]
    minus = [Poly([1])]
    for _ in range(m):
        plus.append(plus[-1] * Poly([1, 1]))
        minus.append(minus[-1] * Poly([1, -1]))
    acc = Poly()
    for k, c in enumerate(p.coeffs):
        if c:
            acc = acc + plus[k] * minus[m - k] * c
    return acc


def poly_eval_float(p: Poly, z: complex) -> complex:
    """Horner evaluation in double precision complex arithmetic."""
    z = complex(z)
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + float(c)
    return acc

