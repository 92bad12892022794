"""Closed-form bounds on zero locations, zero counts and auxiliary sums.

Plain float formulas for the band edges; the inequality checks that need
care (power sums, the r >= 2 zeta tail, Stirling) are exact or run in
multiprecision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from mpmath import mp, mpf

TWO_PI_E = 2 * math.pi * math.e
PI_E = math.pi * math.e


def main_edge(p: float) -> float:
    """(p-1)/(2 pi e): below this the zeros sit near a = p/4 + l/2."""
    return (p - 1) / TWO_PI_E


def oscillation_edge(p: float) -> float:
    """p/(2 pi e): right end of the band where Z_p(a) ~ sin(2 pi a - pi p/2)."""
    return p / TWO_PI_E


def negativity_edge(p: float) -> float:
    """p/(2 pi e) + log(p)/(4 pi e) + 1: zeta(-p, a) < 0 beyond this."""
    return p / TWO_PI_E + math.log(p) / (2 * TWO_PI_E) + 1


def A_bounds(p: float) -> Tuple[float, float]:
    """Open interval that must contain the largest zero A(p)."""
    return (p - 1) / TWO_PI_E - 0.5, negativity_edge(p)


def N_bounds(p: float) -> Tuple[float, float]:
    """Open interval that must contain the zero count N(p)."""
    base = (p - 1) / PI_E
    return base - 1, base + 0.5 * math.log(p) + TWO_PI_E + 2


def boundary_zone_cap(p: float) -> float:
    """Most zeros allowed between main_edge and negativity_edge."""
    return 0.5 * math.log(p) + TWO_PI_E + 1


def bernoulli_A_bounds(m: int) -> Tuple[float, float]:
    """Open interval for the largest real root of B_m."""
    lo = m / TWO_PI_E - (1 / PI_E + 0.5)
    hi = m / TWO_PI_E + math.log(m) / (2 * TWO_PI_E) + (1 - 1 / TWO_PI_E)
    return lo, hi


def bernoulli_N_bounds(m: int) -> Tuple[float, float]:
    """Open interval for the number of real roots of B_m."""
    lo = 2 * m / PI_E - (2 / PI_E + 2)
    hi = 2 * m / PI_E + math.log(m) + (4 * math.pi * math.e + 3 - 4 / PI_E)
    return lo, hi


def nearest_lattice(p: float, a: float) -> Tuple[Fraction, float]:
    """Nearest point of p/4 + l/2 (l integer), exactly, and the distance to it."""
    l = round(2 * (a - p / 4))
    point = Fraction(p) / 4 + Fraction(l, 2)
    return point, float(abs(Fraction(a) - point))


# ------------------------------------------------------------ inequalities


def power_sum(p: int, n: int) -> int:
    """S(p, n) = 1^p + ... + n^p, exactly."""
    return sum(k**p for k in range(1, n + 1))


@dataclass(frozen=True)
class PowerSumCheck:
    p: int
    n: int
    holds: bool
    equality: bool  # n = 1: both sides are exactly 1


def check_power_sum(p: int, n: int, prec: int = 256) -> PowerSumCheck:
    """S(p, n) < n^p (1 - e^-p) / (1 - e^(-p/n)), equality exactly at n = 1."""
    if n == 1:
        return PowerSumCheck(p, n, True, True)
    s = power_sum(p, n)
    with mp.workprec(prec + p.bit_length() * 8):
        rhs = mpf(n) ** p * (1 - mp.exp(-p)) / (1 - mp.exp(-mpf(p) / n))
        # the gap is at least ~n^p * e^-p / n, far above the rounding here
        holds = mpf(s) < rhs * (1 - mpf(2) ** (-prec // 2))
    return PowerSumCheck(p, n, bool(holds), False)


@dataclass(frozen=True)
class TailCheck:
    p: int
    partial: mpf  # sum of r^(-1-p) for 2 <= r <= terms + 1
    upper: mpf  # partial plus the integral bound on the rest
    bound: mpf  # (zeta(2) - 3/4) 2^-p
    holds: bool


def zeta_tail_bound(p: int, prec: int = 256) -> mpf:
    """(zeta(2) - 3/4) 2^-p."""
    with mp.workprec(prec):
        return (mp.pi**2 / 6 - mpf(3) / 4) * mpf(2) ** (-p)


def check_zeta_tail(p: int, max_terms: int = 100_000, prec: int = 256) -> TailCheck:
    """Sum r^(-1-p) from r = 2 until partial + R^-p / p drops below the bound.

    The sum over r > R is below the integral of x^(-1-p) from R, so
    ``upper`` is a rigorous upper enclosure (rounding is far below the gaps
    involved at this precision).
    """
    bound = zeta_tail_bound(p, prec)
    with mp.workprec(prec):
        partial = mpf(0)
        for r in range(2, max_terms + 2):
            partial += mpf(r) ** (-1 - p)
            upper = partial + mpf(r) ** (-p) / p
            if upper < bound:
                return TailCheck(p, partial, upper, bound, True)
        return TailCheck(p, partial, upper, bound, False)


def stirling_log_bounds(p, prec: int = 256) -> Tuple[mpf, mpf]:
    """log of (2 pi p)^(1/2) p^p e^-p and of the same times e^(1/(12p))."""
    with mp.workprec(prec):
        p = mpf(p)
        lo = (mp.log(2 * mp.pi * p)) / 2 + p * mp.log(p) - p
        return lo, lo + 1 / (12 * p)


def check_stirling(p, log_gamma_one_plus_p: mpf, prec: int = 256) -> bool:
    lo, hi = stirling_log_bounds(p, prec)
    with mp.workprec(prec):
        return bool(lo < log_gamma_one_plus_p < hi)


def theorem1_constants(alpha: float) -> Tuple[float, float]:
    """C1 and C2 as they come out of the proof of the Fourier approximation."""
    c1 = math.pi / (math.sqrt(2 * math.pi) * (1 - math.exp(-1 / alpha)))
    c2 = math.pi**2 / 6 - 0.75
    return c1, c2


def theorem1_bound(p: float, a: float) -> mpf:
    """C1 p^(-1/2) (2 pi e alpha)^p + C2 2^(-p) with alpha = a/p."""
    alpha = a / p
    c1, c2 = theorem1_constants(alpha)
    with mp.workprec(128):
        return c1 / mp.sqrt(p) * (mpf(TWO_PI_E) * alpha) ** p + c2 * mpf(2) ** (-p)


def shift_sum_bound(p: float, n: int) -> mpf:
    """{2 pi e n / p}^p * pi / sqrt(2 pi p) * (1 - e^-p) / (1 - e^(-p/n))."""
    with mp.workprec(128):
        p = mpf(p)
        return ((2 * mp.pi * mp.e * n / p) ** p * mp.pi / mp.sqrt(2 * mp.pi * p)
                * (1 - mp.exp(-p)) / (1 - mp.exp(-p / n)))
