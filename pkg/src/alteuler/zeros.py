"""
Root certification for the alternating Eulerian polynomials.

The companion polynomials P̃_n are real-rooted on [-1, 1] with the zeros of
P̃_(n-1) separating those of P̃_n.  Roots are therefore isolated by a ladder:
the brackets for P̃_n are -1, the interior roots of P̃_(n-1), and 1.  Every
sign used by the bisection is computed exactly (the midpoints are binary
fractions and the coefficients are integers), so a bracket without a sign
change is a genuine failure of the separation property at the computed
precision, never rounding noise.

A positive root r of P̃_n gives c = r^2, one of the a_i (n odd) or b_i
(n even), and the conjugate pair of Â_n zeros

    -(1 - c)/(1 + c)  +/-  i 2 sqrt(c)/(1 + c).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import CertificationError
from .poly import Poly, poly_eval_float
from .report import CheckReport
from .sequences import alt_eulerian_recurrence, tilde_p

__all__ = [
    "RootList", "ZeroReport", "real_roots_tilde_p", "alt_eulerian_zeros",
    "check_interlacing", "check_unit_modulus", "zero_from_source",
    "modulus_squared_exact", "exact_sources", "imag_complement", "BISECTION_TOL",
    "MODULUS_TOL", "MARGIN_TOL", "RESIDUAL_EPS",
]

BISECTION_TOL = 1e-13
MODULUS_TOL = 1e-8
MARGIN_TOL = 1e-10
RESIDUAL_EPS = 1e-9

_ONE_MINUS_X2 = Poly([1, 0, -1])


@dataclass(frozen=True)
class RootList:
    n: int
    roots: tuple[float, ...]
    residuals: tuple[float, ...]


@dataclass(frozen=True)
class ZeroReport:
    """Zeros of Â_n as upper-half-plane representatives.

    Each entry of ``zeros`` with positive imaginary part stands for a
    conjugate pair; the real zero -1 (even n) appears once with imaginary
    part 0 and sets ``has_minus_one``.
    """

    n: int
    zeros: tuple[tuple[float, float], ...]
    has_minus_one: bool
    source_label: str
    source: tuple[float, ...]
    roots: tuple[float, ...]
    moduli: tuple[float, ...]
    residuals: tuple[float, ...]
    residual_bound: float

    @property
    def pairs(self) -> list[tuple[float, float]]:
        return [z for z in self.zeros if z[1] > 0]

    def all_zeros(self) -> list[complex]:
        out = []
        for re, im in self.zeros:
            out.append(complex(re, im))
            if im > 0:
                out.append(complex(re, -im))
        return out

    @property
    def zero_count(self) -> int:
        return len(self.all_zeros())


def _sign_at(p: Poly, x: float) -> int:
    """Exact sign of p(x) for a finite double x."""
    a, b = x.as_integer_ratio()
    coeffs = p.coeffs
    d = len(coeffs) - 1
    # b^d p(a/b) by Horner in integers
    acc, bpow = coeffs[d], 1
    for k in range(d - 1, -1, -1):
        bpow *= b
        acc = acc * a + coeffs[k] * bpow
    return (acc > 0) - (acc < 0)


def _bisect(p: Poly, lo: float, hi: float, tol: float, n: int) -> float:
    s_lo, s_hi = _sign_at(p, lo), _sign_at(p, hi)
    if s_lo == 0:
        return lo
    if s_hi == 0:
        return hi
    if s_lo == s_hi:
        raise CertificationError(
            f"no sign change of P~_{n}/(1-x^2) on [{lo!r}, {hi!r}]; "
            f"the separation bracket failed")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid <= lo or mid >= hi:
            break
        s = _sign_at(p, mid)
        if s == 0:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@lru_cache(maxsize=None)
def _interior_roots(n: int, tol: float) -> tuple[float, ...]:
    if n <= 1:
        return ()
    q = tilde_p(n).exact_div(_ONE_MINUS_X2)
    ends = (-1.0,) + _interior_roots(n - 1, tol) + (1.0,)
    return tuple(_bisect(q, lo, hi, tol, n) for lo, hi in zip(ends, ends[1:]))


def real_roots_tilde_p(n: int, tol: float = BISECTION_TOL) -> RootList:
    """All n+1 real roots of P̃_n in ascending order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if tol < 1e-14:
        raise ValueError("tol below 1e-14 is not resolvable in double precision")
    p = tilde_p(n)
    if p(1) != 0 or p(-1) != 0:
        raise CertificationError(f"P~_{n} does not vanish at +/-1")
    roots = (-1.0,) + _interior_roots(n, tol) + (1.0,)
    if any(b <= a for a, b in zip(roots, roots[1:])):
        raise CertificationError(f"roots of P~_{n} are not strictly increasing: {roots}")
    residuals = tuple(abs(poly_eval_float(p, r)) for r in roots)
    return RootList(n, roots, residuals)


def zero_from_source(r: float) -> tuple[float, float]:
    """Upper Â zero for the positive P̃ root r (so c = r^2)."""
    c = r * r
    return -(1 - c) / (1 + c), 2 * r / (1 + c)


def imag_complement(r: float) -> float:
    """1 - Im(zero) = (1 - r)^2 / (1 + r^2), free of cancellation near Im = 1."""
    return (1 - r) ** 2 / (1 + r * r)


def modulus_squared_exact(c: Fraction) -> Fraction:
    """|zero|^2 computed in rationals from c = a_i or b_i."""
    c = Fraction(c)
    return ((1 - c) / (1 + c)) ** 2 + 4 * c / (1 + c) ** 2


def exact_sources(n: int) -> list[Fraction] | None:
    """The a_i/b_i of index n as exact rationals when P_n factors linearly in x^2.

    Returns None when the reduced factor has degree > 1 in x^2, where the
    values are in general irrational.
    """
    q = tilde_p(n).exact_div(_ONE_MINUS_X2)
    if n % 2 == 0:
        q = q.exact_div(Poly([0, 1]))
    y = Poly(q.coeffs[0::2])  # q(x) = y(x^2)
    if y.is_zero() or len(y) == 1:
        return []
    if len(y) != 2:
        return None
    return [Fraction(-y[0], y[1])]


@lru_cache(maxsize=None)
def _zero_report(n: int, root_tol: float) -> ZeroReport:
    roots = real_roots_tilde_p(n, root_tol).roots
    positive = [r for r in roots if 0 < r < 1]
    a = alt_eulerian_recurrence(n)
    zeros = [zero_from_source(r) for r in positive]
    has_minus_one = n % 2 == 0
    if has_minus_one:
        if a(-1) != 0:
            raise CertificationError(f"Â_{n}(-1) != 0")
        zeros.insert(0, (-1.0, 0.0))
    bound = RESIDUAL_EPS * float(a.norm1())
    residuals = []
    for re, im in zeros:
        res = abs(poly_eval_float(a, complex(re, im)))
        if not math.isfinite(res) or res > bound:
            raise CertificationError(
                f"Â_{n} residual {res:.3e} at {re}+{im}i exceeds {bound:.3e}")
        residuals.append(res)
    report = ZeroReport(
        n=n,
        zeros=tuple(zeros),
        has_minus_one=has_minus_one,
        source_label="b" if n % 2 == 0 else "a",
        source=tuple(r * r for r in positive),
        roots=tuple(positive),
        moduli=tuple(math.hypot(re, im) for re, im in zeros),
        residuals=tuple(residuals),
        residual_bound=bound,
    )
    if report.zero_count != a.degree:
        raise CertificationError(
            f"found {report.zero_count} zeros of Â_{n}, expected {a.degree}")
    return report


def alt_eulerian_zeros(n: int, tol: float = BISECTION_TOL) -> ZeroReport:
    if n < 2:
        raise ValueError("Â_n has no zeros for n < 2")
    return _zero_report(n, tol)


def _min_pairwise_distance(points: list[complex]) -> float:
    if len(points) < 2:
        return math.inf
    return min(abs(p - q) for p, q in combinations(points, 2))


def _chain_margin(chain: list[float], lower: float | None = None) -> float:
    """Smallest successive gap; negative when the chain is out of order."""
    values = ([lower] if lower is not None else []) + chain
    if len(values) < 2:
        return math.inf
    return min(b - a for a, b in zip(values, values[1:]))


def _interleave(first: list[float], second: list[float]) -> list[float]:
    out = []
    for i in range(max(len(first), len(second))):
        if i < len(first):
            out.append(first[i])
        if i < len(second):
            out.append(second[i])
    return out


def check_interlacing(n: int, tol: float = MARGIN_TOL,
                      root_tol: float = BISECTION_TOL) -> CheckReport:
    """Real and imaginary parts of the zeros of Â_n separate those of Â_(n+1)."""
    if n < 2:
        raise ValueError("interlacing is stated for n >= 2")
    rep = CheckReport(f"interlacing n={n}")
    cur, nxt = alt_eulerian_zeros(n, root_tol), alt_eulerian_zeros(n + 1, root_tol)
    cur_pairs, nxt_pairs = cur.pairs, nxt.pairs
    if n % 2 == 0:
        # Â_n/(1+x) zeros r_j against Â_(n+1) zeros s_j: s1 < r1 < s2 < ... < s_m
        pattern = "si01"
        order = (nxt_pairs, cur_pairs)
        order_roots = (nxt.roots, cur.roots)
    else:
        # Â_n zeros s_j against Â_(n+1)/(1+x) zeros p_j: s1 < p1 < ... < s_m < p_m
        pattern = "si02"
        order = (cur_pairs, nxt_pairs)
        order_roots = (cur.roots, nxt.roots)
    if len(order[0]) - len(order[1]) not in (0, 1):
        rep.record("pair counts", False, counts=[len(order[0]), len(order[1])])
        return rep
    real_chain = _interleave([z[0] for z in order[0]], [z[0] for z in order[1]])
    root_chain = _interleave(list(order_roots[0]), list(order_roots[1]))
    # imaginary parts increase along the chain iff 1 - Im decreases
    comp = [imag_complement(r) for r in root_chain]
    real_margin = _chain_margin(real_chain, lower=-1.0)
    upper_gap = -real_chain[-1] if real_chain else math.inf
    imag_margin = _chain_margin([-d for d in comp], lower=-1.0)
    imag_chain = [1 - d for d in comp]
    simple = min(_min_pairwise_distance(cur.all_zeros()), _min_pairwise_distance(nxt.all_zeros()))
    rep.info.update(pattern=pattern, real_margin=real_margin, imag_margin=imag_margin,
                    upper_gap=upper_gap, min_zero_distance=simple, real_chain=real_chain)
    if len(real_chain) < 2:
        rep.notes.append(f"{pattern} is vacuous beyond -1 < first for n={n}")
    rep.record(f"{pattern} real parts", real_margin > tol, margin=real_margin, chain=real_chain)
    rep.record("real parts below 0", upper_gap > tol, gap=upper_gap)
    # imag = sqrt(1 - re^2) near the top of the circle, so these gaps shrink
    # quadratically; only strict separation is required
    rep.record("imaginary parts", imag_margin > 0, margin=imag_margin, chain=imag_chain)
    rep.record("simple zeros", simple > tol, min_distance=simple)
    return rep


def check_unit_modulus(n_max: int, tol: float = MODULUS_TOL, margin: float = MARGIN_TOL,
                       root_tol: float = BISECTION_TOL) -> CheckReport:
    """Every zero of Â_n (2 <= n <= n_max) has modulus 1; the a/b chain interlaces."""
    rep = CheckReport("zeros-modulus")
    worst = 0.0
    for n in range(2, n_max + 1):
        zr = alt_eulerian_zeros(n, root_tol)
        dev = max(abs(m - 1) for m in zr.moduli)
        worst = max(worst, dev)
        rep.record(f"n={n}:modulus", dev <= tol, n=n, max_deviation=dev)
        exact = exact_sources(n)
        if exact:
            rep.record(f"n={n}:exact-modulus",
                       all(modulus_squared_exact(c) == 1 for c in exact), n=n,
                       sources=[str(c) for c in exact])
    rep.info["max_modulus_deviation"] = worst
    chain_margin = math.inf
    m = 1
    while 2 * m + 2 <= n_max:
        a = alt_eulerian_zeros(2 * m + 1, root_tol).source
        b = alt_eulerian_zeros(2 * m + 2, root_tol).source
        chain = _interleave(list(a), list(b)) + [1.0]
        gap = _chain_margin(chain, lower=0.0)
        chain_margin = min(chain_margin, gap)
        rep.record(f"m={m}:aibi", len(a) == len(b) == m and gap > margin, m=m, a=a, b=b, margin=gap)
        m += 1
    rep.info["aibi_margin"] = chain_margin
    return rep
