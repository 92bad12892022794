"""Zero locus of zeta(sigma, a) in the (sigma, a) half-plane sigma <= -10.

For sigma = -p the zeros near a = p/4 + l/2 line up along
sigma + 4a + 2m = 0 with m = -l; each zero becomes one LocusRow.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from mpmath import mp, mpf

from . import bounds
from .errors import DomainError, PrecisionExhausted
from .zeta import DEFAULT_CONFIG, EvalConfig
from .zeros import MAIN, P_MIN, census, polish_root

LOCUS_HEADER = ("sigma", "a", "region_label", "nearest_line_m", "line_residual")
ZERO_HEADER = ("p", "a_lo", "a_hi", "root", "lattice_point", "lattice_distance", "region")
SIGNIFICANT_DIGITS = 20


def region_label(p: float, a: float) -> str:
    """Figure band of a point with sigma = -p.

    IV: 0 < a < 1.  II: lattice zeros up to (p-1)/(2 pi e).  III: the zone up
    to the negativity edge.  I: beyond it, where no zeros occur.
    """
    if a < 1:
        return "IV"
    if a < bounds.main_edge(p):
        return "II"
    if a < bounds.negativity_edge(p):
        return "III"
    return "I"


@dataclass(frozen=True)
class LocusRow:
    sigma: float
    a: mpf
    region_label: str
    nearest_line_m: int
    line_residual: mpf
    main: bool  # zero lies in the main interval of its p

    @classmethod
    def from_zero(cls, sigma: float, a: mpf, main: bool) -> "LocusRow":
        with mp.workprec(192):
            t = mpf(sigma) + 4 * a
            m = int(mp.nint(-t / 2))
            residual = t + 2 * m
        return cls(float(sigma), a, region_label(-sigma, float(a)), m, residual, main)

    def as_row(self) -> Tuple[str, ...]:
        return (
            fmt_real(self.sigma),
            fmt_real(self.a),
            self.region_label,
            str(self.nearest_line_m),
            fmt_real(self.line_residual),
        )


def fmt_real(x) -> str:
    """20 significant digits, the same text for the same value every time."""
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, float) or isinstance(x, int):
        if float(x).is_integer() and abs(x) < 1e20:
            return str(int(x))
        return format(float(x), f".{SIGNIFICANT_DIGITS}g")
    if x == 0:
        return "0"
    with mp.workprec(128):
        return mp.nstr(x, SIGNIFICANT_DIGITS, min_fixed=-4, max_fixed=21)


def fmt_rational(x: Fraction) -> str:
    """"p/q", or just "p" for an integer; Fraction() reads both back."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def sigma_grid(sigma_min: float, sigma_max: float, sigma_step: float) -> List[float]:
    """Inclusive grid; a degenerate range (min == max) is empty."""
    if sigma_step <= 0:
        raise DomainError("sigma_step must be positive")
    if sigma_min > sigma_max:
        raise DomainError("sigma_min must not exceed sigma_max")
    if sigma_min == sigma_max:
        return []
    n = int((sigma_max - sigma_min) / sigma_step + 1e-9)
    return [sigma_min + k * sigma_step for k in range(n + 1)]


@dataclass(frozen=True)
class SigmaOutcome:
    sigma: float
    rows: Tuple[LocusRow, ...]
    seconds: float
    error: Optional[str]


def locus_at(sigma: float, cfg: EvalConfig = DEFAULT_CONFIG) -> SigmaOutcome:
    start = time.perf_counter()
    try:
        c = census(-sigma, cfg)
        rows = tuple(
            LocusRow.from_zero(sigma, polish_root(-sigma, z, cfg), z.region == MAIN)
            for z in c.zeros
        )
        err = None
    except (PrecisionExhausted, DomainError) as exc:
        rows, err = (), f"{type(exc).__name__}: {exc}"
    return SigmaOutcome(sigma, rows, time.perf_counter() - start, err)


def _locus_task(args):
    return locus_at(*args)


def locus(
    sigma_min: float,
    sigma_max: float,
    sigma_step: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    jobs: int = 1,
    p_min: float = P_MIN,
) -> List[SigmaOutcome]:
    """Census every sigma on the grid; outcomes come back in grid order."""
    if sigma_max > -p_min:
        raise DomainError(f"sigma_max must be <= {-p_min}")
    grid = sigma_grid(sigma_min, sigma_max, sigma_step)
    tasks = [(s, cfg) for s in grid]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_locus_task, tasks))
    return [locus_at(*t) for t in tasks]


def mean_main_residual(rows: Sequence[LocusRow]) -> Optional[mpf]:
    main = [abs(r.line_residual) for r in rows if r.main]
    if not main:
        return None
    with mp.workprec(128):
        return mp.fsum(main) / len(main)
