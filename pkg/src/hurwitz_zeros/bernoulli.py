"""Exact Bernoulli polynomials and their real roots.

This is the exact ground truth for every integer-order evaluation in the
package: ``zeta(-m, a) = -B_{m+1}(a)/(m+1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt
from typing import List, Optional, Sequence, Tuple, Union

from gmpy2 import mpz

from . import sturm
from .errors import DomainError

__all__ = [
    "BernoulliCensus",
    "RationalPolynomial",
    "RootIsolation",
    "bernoulli_census",
    "bernoulli_number",
    "bernoulli_numbers",
    "eval_exact",
    "generate_bernoulli",
    "isolate_real_roots",
    "zeta_at_negative_integer",
]

DEFAULT_ROOT_WIDTH = Fraction(1, 2**40)
RATIONAL_ROOT_CANDIDATES = (Fraction(0), Fraction(1, 2), Fraction(1))

Interval = Tuple[Fraction, Fraction]


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_rational(s: str) -> Fraction:
    if any(ch in s for ch in ".eE"):
        raise ValueError(f"expected an exact 'p/q' rational, got {s!r}")
    return Fraction(s)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with exact rational coefficients, ``coeffs[k]`` multiplies a**k."""

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if not coeffs or coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        return eval_exact(self, x)

    def derivative(self) -> "RationalPolynomial":
        if self.degree == 0:
            raise ValueError("derivative of a constant is the zero polynomial")
        return RationalPolynomial(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def scaled(self, factor) -> "RationalPolynomial":
        return RationalPolynomial(tuple(c * Fraction(factor) for c in self.coeffs))

    def to_integer(self) -> sturm.IntPoly:
        return sturm.from_rationals(self.coeffs)

    def to_json(self) -> str:
        return json.dumps({"n": self.degree, "coeffs": [_fmt_rational(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "RationalPolynomial":
        data = json.loads(text)
        poly = cls(tuple(_parse_rational(c) for c in data["coeffs"]))
        if poly.degree != data["n"]:
            raise ValueError("degree field disagrees with coefficient list")
        return poly

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = _fmt_rational(mag)
            else:
                power = "a" if k == 1 else f"a^{k}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag.numerator}*{power}"
                else:
                    body = f"({_fmt_rational(mag)})*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> Tuple[Fraction, ...]:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0, from the generating function at a = 0
    table = [Fraction(1)]
    for m in range(1, n + 1):
        if m > 1 and m % 2:
            table.append(Fraction(0))
            continue
        s = sum(comb(m + 1, k) * table[k] for k in range(m) if table[k])
        table.append(-s / (m + 1))
    return tuple(table)


def bernoulli_numbers(n: int) -> Tuple[Fraction, ...]:
    """B_0 .. B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    # grow in chunks so repeated calls share one cached table
    size = max(64, 1 << (n.bit_length()))
    return _bernoulli_table(size)[: n + 1]


def bernoulli_number(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


@lru_cache(maxsize=512)
def generate_bernoulli(n: int) -> RationalPolynomial:
    """Exact B_n(a) = sum_k C(n, k) B_k a^(n-k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    b = bernoulli_numbers(n)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * b[k]
    return RationalPolynomial(tuple(coeffs))


def eval_exact(poly: RationalPolynomial, x) -> Fraction:
    """Horner evaluation in exact rational arithmetic."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(poly.coeffs):
        acc = acc * x + c
    return acc


def zeta_at_negative_integer(m: int, a) -> Fraction:
    """zeta(-m, a) = -B_{m+1}(a)/(m+1), exactly."""
    if m < 0:
        raise DomainError("m must be a non-negative integer")
    a = Fraction(a)
    if a <= 0:
        raise DomainError("the Hurwitz parameter a must be positive")
    return -eval_exact(generate_bernoulli(m + 1), a) / (m + 1)


@dataclass(frozen=True)
class RootIsolation:
    polynomial_degree: int
    intervals: Tuple[Interval, ...]
    exact_roots: Tuple[Fraction, ...]

    @property
    def count(self) -> int:
        return len(self.intervals) + len(self.exact_roots)

    def enclosures(self) -> List[Interval]:
        """All roots as closed intervals, exact ones degenerate, ascending."""
        out = list(self.intervals) + [(r, r) for r in self.exact_roots]
        return sorted(out)

    def largest(self) -> Interval:
        return self.enclosures()[-1]


def _split_off(p: sturm.IntPoly, lo: Fraction, hi: Fraction, points) -> Interval:
    # keep the isolating interval clear of already-deflated exact roots
    for c in points:
        if lo < c < hi:
            if sturm.sign_at(p, lo) != sturm.sign_at(p, c):
                hi = c
            else:
                lo = c
    return lo, hi


def isolate_real_roots(
    poly: RationalPolynomial,
    domain: str = "all",
    width: Fraction = DEFAULT_ROOT_WIDTH,
) -> RootIsolation:
    """Certified isolation of the distinct real roots of ``poly``.

    ``domain`` is ``"all"`` for the whole line or ``"positive"`` for a > 0.
    Rational candidates 0, 1/2 and 1 are tested and divided out first.
    """
    if domain not in ("all", "positive"):
        raise ValueError("domain must be 'all' or 'positive'")
    p = sturm.squarefree_part(poly.to_integer())
    exact: List[Fraction] = []
    for c in RATIONAL_ROOT_CANDIDATES:
        if len(p) > 1 and sturm.sign_at(p, c) == 0:
            exact.append(c)
            p = sturm.deflate(p, c)
    bound = Fraction(sturm.root_bound(p))
    lo = Fraction(0) if domain == "positive" else -bound
    intervals: List[Interval] = []
    if len(p) > 1:
        chain = sturm.SturmSequence(p)
        found, more = sturm.isolate(p, chain, lo, bound)
        exact.extend(more)
        for a, b in found:
            a, b = _split_off(p, a, b, exact)
            r = sturm.refine(p, a, b, width)
            if isinstance(r, tuple):
                intervals.append(r)
            else:
                exact.append(r)
    if domain == "positive":
        exact = [r for r in exact if r > 0]
    return RootIsolation(poly.degree, tuple(sorted(intervals)), tuple(sorted(exact)))


@dataclass(frozen=True)
class BernoulliCensus:
    """Number of distinct real roots of B_m and an enclosure of the largest."""

    m: int
    N: int
    A_lo: Fraction
    A_hi: Fraction
    positive_count: int

    @property
    def A_exact(self) -> bool:
        return self.A_lo == self.A_hi

    @property
    def A(self) -> Fraction:
        return (self.A_lo + self.A_hi) / 2


@lru_cache(maxsize=None)
def _symmetric_form(m: int) -> Tuple[sturm.IntPoly, int]:
    """B_m(1/2 + t) = t**odd * P(t**2); returns (P, odd)."""
    b = bernoulli_numbers(m)
    odd = m % 2
    coeffs = [Fraction(0)] * ((m - odd) // 2 + 1)
    for k in range(0, m + 1, 2):
        # B_k(1/2) = (2^(1-k) - 1) B_k, zero for odd k
        half = (Fraction(2) ** (1 - k) - 1) * b[k]
        coeffs[(m - k - odd) // 2] = comb(m, k) * half
    return sturm.from_rationals(coeffs), odd


def _sqrt_bounds(u: Fraction, bits: int) -> Tuple[Fraction, Fraction]:
    scale = 1 << (2 * bits)
    lo_num = (u.numerator * scale) // u.denominator
    hi_num = -((-u.numerator * scale) // u.denominator)
    r = isqrt(lo_num)
    s = isqrt(hi_num)
    if s * s < hi_num:
        s += 1
    return Fraction(r, 1 << bits), Fraction(s, 1 << bits)


def _exact_sqrt(u: Fraction) -> Optional[Fraction]:
    n, d = isqrt(u.numerator), isqrt(u.denominator)
    if n * n == u.numerator and d * d == u.denominator:
        return Fraction(n, d)
    return None


def _sqrt_enclosure(u_lo: Fraction, u_hi: Fraction, bits: int = 60) -> Interval:
    if u_lo == u_hi:
        t = _exact_sqrt(u_lo)
        if t is not None:
            return t, t
    return _sqrt_bounds(u_lo, bits)[0], _sqrt_bounds(u_hi, bits)[1]


@lru_cache(maxsize=None)
def bernoulli_census(m: int, width: Fraction = DEFAULT_ROOT_WIDTH) -> BernoulliCensus:
    """Sturm-certified count of real roots of B_m and the largest root.

    Uses the reflection B_m(1 - x) = (-1)^m B_m(x): with x = 1/2 + t the
    polynomial is t**(m mod 2) * P(t**2), so only the positive roots of a
    polynomial of half the degree have to be counted.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    P, center = _symmetric_form(m)
    if len(P) > 1 and P[0] == 0:
        raise ArithmeticError("multiple root at a = 1/2")
    quarter = Fraction(1, 4)
    # u = 1/4 is the pair x = 0, x = 1 (every odd m >= 3)
    edge = len(P) > 1 and sturm.sign_at(P, quarter) == 0
    if edge:
        P = sturm.deflate(P, quarter)
    N = center + 2 * edge
    top: Optional[Interval] = (quarter, quarter) if edge else None
    nonpositive = int(edge)
    if len(P) > 1:
        chain = sturm.SturmSequence(P)
        N += 2 * chain.count(Fraction(0), float("inf"))
        # roots x <= 0 mirror roots 1 - x >= 1, i.e. u >= 1/4
        beyond = chain.count(quarter, float("inf"))
        nonpositive += beyond
        found = sturm.largest_root(P, chain, Fraction(0), Fraction(sturm.root_bound(P)))
        if isinstance(found, Fraction):
            found = (found, found)
        if found is not None and (top is None or beyond):
            top = found
    if top is None:
        return BernoulliCensus(m, N, Fraction(1, 2), Fraction(1, 2), N - nonpositive)
    u_lo, u_hi = top
    t_lo, t_hi = _sqrt_enclosure(u_lo, u_hi)
    while t_hi - t_lo >= width:
        mid = u_lo + (u_hi - u_lo) / 2
        s = sturm.sign_at(P, mid)
        if s == 0:
            u_lo = u_hi = mid
        elif s == sturm._sign_right_of(P, u_lo):
            u_lo = mid
        else:
            u_hi = mid
        t_lo, t_hi = _sqrt_enclosure(u_lo, u_hi)
    half = Fraction(1, 2)
    return BernoulliCensus(m, N, half + t_lo, half + t_hi, N - nonpositive)
