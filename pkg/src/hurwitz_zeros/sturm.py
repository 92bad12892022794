"""Exact real-root counting and isolation for integer polynomials.

Polynomials here are plain lists of ``gmpy2.mpz`` coefficients, lowest
degree first.  Everything is exact: signs are decided by integer Horner
evaluation at rational points, root counts by Sturm sequences built from a
primitive pseudo-remainder sequence.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

import gmpy2
from gmpy2 import mpz

IntPoly = List[mpz]
Point = Union[Fraction, int, float]  # float only for +-inf

__all__ = [
    "IntPoly",
    "SturmSequence",
    "content",
    "deflate",
    "derivative",
    "from_rationals",
    "isolate",
    "largest_root",
    "refine",
    "root_bound",
    "sign_at",
    "squarefree_part",
]


def _trim(p: IntPoly) -> IntPoly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def content(p: Sequence[mpz]) -> mpz:
    g = mpz(0)
    for c in p:
        g = gmpy2.gcd(g, c)
        if g == 1:
            break
    return g


def primitive(p: Sequence[mpz]) -> IntPoly:
    """Primitive part with a positive leading coefficient."""
    g = content(p)
    if g == 0:
        raise ValueError("zero polynomial has no primitive part")
    if p[-1] < 0:
        g = -g
    return [c // g for c in p]


def from_rationals(coeffs: Sequence[Fraction]) -> IntPoly:
    """Clear denominators and return the primitive integer polynomial."""
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    p = _trim([mpz(Fraction(c) * den) for c in coeffs])
    return primitive(p)


def derivative(p: Sequence[mpz]) -> IntPoly:
    if len(p) == 1:
        return [mpz(0)]
    return [i * c for i, c in enumerate(p)][1:]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sign_at(p: Sequence[mpz], x: Point) -> int:
    """Exact sign of ``p(x)``; ``x`` may be a rational or +-inf."""
    if isinstance(x, float):
        if x == float("inf"):
            return _sign(p[-1])
        if x == float("-inf"):
            return _sign(p[-1]) * (-1 if (len(p) - 1) % 2 else 1)
        raise TypeError("finite points must be exact rationals")
    x = Fraction(x)
    num, den = mpz(x.numerator), mpz(x.denominator)
    d = len(p) - 1
    v = p[d]
    if den == 1:
        for i in range(d - 1, -1, -1):
            v = v * num + p[i]
        return _sign(v)
    shift = den.bit_length() - 1
    if den == mpz(1) << shift:
        # dyadic point: powers of the denominator are shifts
        for i in range(d - 1, -1, -1):
            v = v * num + (p[i] << (shift * (d - i)))
        return _sign(v)
    dpow = den
    for i in range(d - 1, -1, -1):
        v = v * num + p[i] * dpow
        dpow *= den
    return _sign(v)


def _prem_negated(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive part of ``-(a mod b)``, up to a positive factor."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    flip = lb < 0
    negate = False
    while len(a) - 1 >= db and any(a):
        la = a[-1]
        sh = len(a) - 1 - db
        a = [lb * c for c in a]
        if flip:
            negate = not negate
        for i, c in enumerate(b):
            a[i + sh] -= la * c
        a.pop()
        _trim(a)
        if not a:
            break
    if not any(a):
        return [mpz(0)]
    g = content(a)
    if not negate:
        g = -g
    return [c // g for c in a]


def _exact_quotient(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient of an exact division of integer polynomials (rational result scaled)."""
    qa = [Fraction(int(c)) for c in a]
    lb = Fraction(int(b[-1]))
    db = len(b) - 1
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        coef = qa[k + db] / lb
        q[k] = coef
        if coef:
            for i, c in enumerate(b):
                qa[k + i] -= coef * int(c)
    if any(qa[:db]):
        raise ArithmeticError("division is not exact")
    return from_rationals(q)


def squarefree_part(p: IntPoly) -> IntPoly:
    chain = SturmSequence(p).chain
    g = chain[-1]
    if len(g) == 1:
        return primitive(p)
    return _exact_quotient(primitive(p), g)


def deflate(p: IntPoly, root: Fraction) -> IntPoly:
    """Divide out every factor ``(den*x - num)`` of ``p``."""
    root = Fraction(root)
    lin = [mpz(-root.numerator), mpz(root.denominator)]
    while len(p) > 1 and sign_at(p, root) == 0:
        p = _exact_quotient(p, lin)
    return p


def root_bound(p: Sequence[mpz]) -> int:
    """Integer power of two strictly above every |root| (Fujiwara bound)."""
    n = len(p) - 1
    if n == 0:
        return 1
    lead = abs(p[n])
    best = mpz(0)
    for i in range(1, n + 1):
        c = abs(p[n - i])
        if c == 0:
            continue
        ratio = -((-c) // lead)  # ceil(c / lead)
        if i == n:
            ratio = -((-ratio) // 2) if ratio > 1 else ratio
        r, exact = gmpy2.iroot(ratio, i)
        if not exact:
            r += 1
        best = max(best, r)
    bound = 2 * best + 1
    return 1 << int(bound).bit_length()


class SturmSequence:
    """Sturm chain of an integer polynomial.

    ``count(lo, hi)`` is the number of distinct real roots in ``(lo, hi]``.
    Zero entries are skipped when counting sign variations, so a root
    sitting exactly at ``lo`` is not counted.
    """

    def __init__(self, p: Sequence[mpz]):
        p = _trim([mpz(c) for c in p])
        if len(p) == 1 and p[0] == 0:
            raise ValueError("zero polynomial")
        chain: List[IntPoly] = [primitive(p)]
        if len(p) > 1:
            chain.append(primitive(derivative(chain[0])))
            while len(chain[-1]) > 1:
                r = _prem_negated(chain[-2], chain[-1])
                if len(r) == 1 and r[0] == 0:
                    break
                chain.append(r)
        self.chain = chain

    @property
    def degree(self) -> int:
        return len(self.chain[0]) - 1

    def variations(self, x: Point) -> int:
        signs = [s for s in (sign_at(q, x) for q in self.chain) if s]
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    def count(self, lo: Point = float("-inf"), hi: Point = float("inf")) -> int:
        return self.variations(lo) - self.variations(hi)


def _sign_right_of(p: IntPoly, x: Fraction) -> int:
    """Sign of squarefree ``p`` just to the right of ``x``."""
    s = sign_at(p, x)
    return s if s else sign_at(derivative(p), x)


def _sign_left_of(p: IntPoly, x: Fraction) -> int:
    s = sign_at(p, x)
    return s if s else -sign_at(derivative(p), x)


class _RootAtSample(Exception):
    def __init__(self, x: Fraction):
        self.x = x


def _cells(p: IntPoly, lo: Fraction, hi: Fraction, samples: int):
    pts = [lo + (hi - lo) * k / samples for k in range(samples + 1)]
    signs = [sign_at(p, x) for x in pts[1:-1]]
    for x, s in zip(pts[1:-1], signs):
        if s == 0:
            raise _RootAtSample(x)
    signs = [_sign_right_of(p, lo)] + signs + [_sign_left_of(p, hi)]
    return [(pts[k], pts[k + 1]) for k in range(samples) if signs[k] != signs[k + 1]]


def _one_sign_change(p: IntPoly, lo: Fraction, hi: Fraction) -> bool:
    return _sign_right_of(p, lo) != _sign_left_of(p, hi)


def isolate(
    p: IntPoly,
    sturm: SturmSequence,
    lo: Fraction,
    hi: Fraction,
    samples: int = 16,
) -> Tuple[List[Tuple[Fraction, Fraction]], List[Fraction]]:
    """Isolate the roots of squarefree ``p`` in ``(lo, hi)``.

    A root at ``lo`` is ignored.  Returns ``(intervals, exact_roots)``; each
    open interval holds exactly one root and ``p`` changes sign across it.
    Grid sign changes are accepted wholesale once their number matches the
    Sturm count, so most calls never evaluate the chain at a finite point.
    """
    intervals: List[Tuple[Fraction, Fraction]] = []
    exact: List[Fraction] = []
    lo, hi = Fraction(lo), Fraction(hi)
    n = sturm.count(lo, hi)
    if sign_at(p, hi) == 0:
        exact.append(hi)
        n -= 1
    stack = [(lo, hi, n)]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and _one_sign_change(p, a, b):
            intervals.append((a, b))
            continue
        try:
            cells = _cells(p, a, b, samples)
        except _RootAtSample as hit:
            split = hit.x
        else:
            if len(cells) == n:
                intervals.extend(cells)
                continue
            split = a + (b - a) / 2
        # count(a, split) covers (a, split]; a root at split is listed apart
        left = sturm.count(a, split)
        if sign_at(p, split) == 0:
            exact.append(split)
            stack.append((a, split, left - 1))
            stack.append((split, b, n - left))
        else:
            stack.append((a, split, left))
            stack.append((split, b, n - left))
    intervals.sort()
    exact.sort()
    return intervals, exact


def largest_root(
    p: IntPoly,
    sturm: SturmSequence,
    lo: Fraction,
    hi: Fraction,
    samples: int = 64,
) -> Optional[Union[Tuple[Fraction, Fraction], Fraction]]:
    """Isolating interval (or exact point) of the largest root of squarefree
    ``p`` in ``(lo, hi)``; None when there is none.  ``hi`` must not be a root.
    """
    a, b = Fraction(lo), Fraction(hi)
    n = sturm.count(a, b)
    if n == 0:
        return None
    while True:
        # invariant: the largest root lies in (a, b) and n roots are there
        if n == 1 and _one_sign_change(p, a, b):
            return (a, b)
        try:
            cells = _cells(p, a, b, samples)
        except _RootAtSample as hit:
            above = sturm.count(hit.x, b)
            if above == 0:
                return hit.x
            a, n = hit.x, above
            continue
        if cells:
            c_lo, c_hi = cells[-1]
            above = sturm.count(c_lo, b)
            if above == 1:
                return (c_lo, c_hi)
            if c_lo > a:
                a, n = c_lo, above
                continue
        mid = a + (b - a) / 2
        above = sturm.count(mid, b)
        if sign_at(p, mid) == 0 and above == 0:
            return mid
        if above:
            a, n = mid, above
        else:
            b = mid


def refine(
    p: IntPoly, lo: Fraction, hi: Fraction, width: Fraction
) -> Union[Tuple[Fraction, Fraction], Fraction]:
    """Bisect an isolating interval of squarefree ``p`` down to ``width``.

    Endpoints may be roots of ``p`` themselves (the interval is open).
    Returns the exact point if a midpoint turns out to be the root.
    """
    s_lo = _sign_right_of(p, lo)
    while hi - lo >= width:
        mid = lo + (hi - lo) / 2
        s = sign_at(p, mid)
        if s == 0:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)
