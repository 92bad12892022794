"""Real zeros of a -> zeta(-p, a): scanning, refinement, census and the
verification reports built on top of them.

Everything works on the normalized function Z_p(a) = zeta(-p, a)/Q(-p),
whose sign is that of zeta(-p, a) because Q(-p) > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import bounds
from mpmath import mp, mpf

from .bernoulli import BernoulliCensus, bernoulli_census
from .errors import DomainError, PrecisionExhausted
from .zeta import DEFAULT_CONFIG, EvalConfig, EvalResult, Z, Z_derivative

P_MIN = 10
WINDOW_LOWER = 1e-6
DEFAULT_STEP = 1 / 8
BOUNDARY_REFINEMENT = 64
DEFAULT_ROOT_TOLERANCE = 1e-12
INKERI_M_MIN = 50

MAIN = "main_interval"
BOUNDARY = "boundary_zone"

Bracket = Tuple[float, float]


@dataclass(frozen=True)
class ZeroRecord:
    p: float
    a_lo: float
    a_hi: float
    root: float
    lattice_point: Fraction
    lattice_distance: float
    region: str

    @property
    def bracket(self) -> Bracket:
        return (self.a_lo, self.a_hi)

    def as_row(self) -> dict:
        return {
            "p": self.p,
            "a_lo": self.a_lo,
            "a_hi": self.a_hi,
            "root": self.root,
            "lattice_point": self.lattice_point,
            "lattice_distance": self.lattice_distance,
            "region": self.region,
        }


@dataclass(frozen=True)
class ZeroCensus:
    p: float
    zeros: Tuple[ZeroRecord, ...]
    bound_checks: Dict[str, bool]

    @property
    def N(self) -> int:
        return len(self.zeros)

    @property
    def A(self) -> Optional[float]:
        return self.zeros[-1].root if self.zeros else None

    @property
    def passed(self) -> bool:
        return all(self.bound_checks.values())

    def main_zeros(self) -> List[ZeroRecord]:
        return [z for z in self.zeros if z.region == MAIN]


def region_of(p: float, a: float) -> str:
    # a zero sitting exactly on the edge counts as boundary zone
    return MAIN if a < bounds.main_edge(p) else BOUNDARY


def _certified(p: float, a: float, cfg: EvalConfig) -> EvalResult:
    r = Z(p, a, cfg)
    if not r.determinate:
        raise PrecisionExhausted(
            f"sign of Z_{p}({a}) undecided at {r.precision_bits} bits", location=(p, a)
        )
    return r


def _grid(p: float, step: float) -> List[float]:
    """Sample points of the search window, in increasing order.

    Every point is 1e-6 plus a multiple of step/64, so none of them can be
    one of the rational zeros 1/2 and 1 that appear at integer p.
    """
    top = bounds.negativity_edge(p)
    edge = min(bounds.main_edge(p), top)
    pts = [WINDOW_LOWER]
    while pts[-1] + step < edge:
        pts.append(pts[-1] + step)
    base, fine, k = pts[-1], step / BOUNDARY_REFINEMENT, 1
    while base + k * fine < top:
        pts.append(base + k * fine)
        k += 1
    pts.append(top)
    return pts


def scan_and_bracket(
    p: float, cfg: EvalConfig = DEFAULT_CONFIG, step: float = DEFAULT_STEP
) -> List[Bracket]:
    """Sign-change brackets of Z_p on (1e-6, negativity_edge(p)].

    The main interval is sampled every ``step``; the boundary zone every
    ``step / 64``.  Grid points are offsets of 1e-6 from multiples of
    ``step``, so they never land on the rational zeros 1/2 and 1 at
    integer p.
    """
    if p <= 0:
        raise DomainError("p must be positive")
    if not 0 < step <= 1 / 8:
        raise DomainError("step must lie in (0, 1/8]")
    if bounds.negativity_edge(p) <= WINDOW_LOWER:
        raise DomainError("search window is empty for this p")
    pts = _grid(p, step)
    signs = [_certified(p, a, cfg).sign for a in pts]
    return [
        (pts[k], pts[k + 1]) for k in range(len(pts) - 1) if signs[k] != signs[k + 1]
    ]


def _record(p: float, lo: float, hi: float, root: float) -> ZeroRecord:
    point, dist = bounds.nearest_lattice(p, root)
    return ZeroRecord(p, lo, hi, root, point, dist, region_of(p, root))


def _settle(p: float, x: float, s_lo: int, tol: float, cfg: EvalConfig) -> ZeroRecord:
    """Record for a point whose value is lost in its error bar.

    Probes just inside x +- tol/2 so the record keeps a certified bracket
    when one exists; otherwise returns the zero-width record at x.
    """
    lo, hi = x - 0.499 * tol, x + 0.499 * tol
    r_lo, r_hi = Z(p, lo, cfg), Z(p, hi, cfg)
    if r_lo.determinate and r_hi.determinate and r_lo.sign == s_lo != r_hi.sign:
        return _record(p, lo, hi, x)
    return _record(p, x, x, x)


def refine_root(
    p: float,
    bracket: Bracket,
    cfg: EvalConfig = DEFAULT_CONFIG,
    root_tolerance: float = DEFAULT_ROOT_TOLERANCE,
) -> ZeroRecord:
    """Shrink a sign-change bracket to ``root_tolerance`` (Illinois method,
    falling back to bisection whenever a step fails to halve the bracket)."""
    lo, hi = map(float, bracket)
    r_lo = Z(p, lo, cfg)
    if not r_lo.determinate:
        # already a zero at the working precision
        return _record(p, lo, lo, lo)
    r_hi = _certified(p, hi, cfg)
    if r_lo.sign == r_hi.sign:
        raise DomainError(f"no sign change on [{lo}, {hi}]")
    s_lo = r_lo.sign
    f_lo, f_hi = float(r_lo.normalized), float(r_hi.normalized)
    secant = math.isfinite(f_lo) and math.isfinite(f_hi)
    side = 0
    while hi - lo > root_tolerance:
        width = hi - lo
        mid = lo + width / 2
        x = mid
        if secant and f_lo != f_hi:
            x = hi - f_hi * (hi - lo) / (f_hi - f_lo)
            if not lo < x < hi:
                x = mid
        if x in (lo, hi):  # bracket is at float resolution
            break
        r = Z(p, x, cfg)
        if not r.determinate:
            return _settle(p, x, s_lo, root_tolerance, cfg)
        fx = float(r.normalized)
        if r.sign == s_lo:
            lo, f_lo = x, fx
            if side == -1:
                f_hi /= 2
            side = -1
        else:
            hi, f_hi = x, fx
            if side == 1:
                f_lo /= 2
            side = 1
        if hi - lo > width / 2:
            # slow step: follow it with a plain bisection
            m = lo + (hi - lo) / 2
            if m in (lo, hi):
                break
            r = Z(p, m, cfg)
            if not r.determinate:
                return _settle(p, m, s_lo, root_tolerance, cfg)
            if r.sign == s_lo:
                lo, f_lo = m, float(r.normalized)
            else:
                hi, f_hi = m, float(r.normalized)
            side = 0
    return _record(p, lo, hi, lo + (hi - lo) / 2)


def polish_root(
    p: float, record: ZeroRecord, cfg: EvalConfig = DEFAULT_CONFIG, steps: int = 3
) -> mpf:
    """Newton steps from the refined root at the working precision.

    Stops early once Z_p is no longer separated from zero, i.e. the root is
    resolved as far as the evaluator can tell.
    """
    with mp.workprec(cfg.precision_bits):
        x = mpf(record.root)
    for _ in range(steps):
        v = Z(p, x, cfg)
        if not v.determinate:
            break
        d = Z_derivative(p, x, cfg)
        if not d.determinate:
            break
        with mp.workprec(cfg.precision_bits + 32):
            x = x - v.normalized / d.normalized
    return x


def find_zeros(
    p: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    step: float = DEFAULT_STEP,
    root_tolerance: float = DEFAULT_ROOT_TOLERANCE,
) -> List[ZeroRecord]:
    return [refine_root(p, b, cfg, root_tolerance) for b in scan_and_bracket(p, cfg, step)]


@dataclass(frozen=True)
class LatticeOffset:
    lattice_point: Fraction
    estimate: float  # one Newton step from the lattice point
    certified_bound: Optional[float]  # a sign change lies within this of it


def lattice_offset(
    p: float, record: ZeroRecord, cfg: EvalConfig = DEFAULT_CONFIG
) -> LatticeOffset:
    """Distance from a zero to its lattice point, resolved below float spacing.

    Takes the Newton step Z_p(L) / Z_p'(L) at the exact lattice point L and
    confirms a sign change on L +- twice that step.  When Z_p(L) is lost in
    its own error bar the step is sized from the error bar instead, which
    handles offsets far below the float range.
    """
    L = Fraction(record.lattice_point)
    v = Z(p, L, cfg)
    d = Z_derivative(p, L, cfg)
    if not d.determinate:
        return LatticeOffset(L, math.inf, None)
    with mp.workprec(max(v.precision_bits, d.precision_bits)):
        step = abs(v.normalized / d.normalized)
        reach = 2 * max(abs(v.normalized), v.err_bound) / abs(d.normalized)
        if reach == 0:
            return LatticeOffset(L, 0.0, 0.0)
        man, exp = reach.man_exp
    half = Fraction(int(man)) * Fraction(2) ** int(exp)
    lo, hi = Z(p, L - half, cfg), Z(p, L + half, cfg)
    if lo.determinate and hi.determinate and lo.sign != hi.sign:
        # round up so an underflowing bound never reads as zero
        bound = math.nextafter(float(half), math.inf)
    elif record.a_lo < record.a_hi:
        # too fine to resolve; fall back on the certified census bracket
        bound = max(abs(record.a_lo - L), abs(record.a_hi - L))
        bound = math.nextafter(float(bound), math.inf)
    else:
        bound = None
    return LatticeOffset(L, float(step), bound)


def _count_all_roots(zeros: Sequence[ZeroRecord]) -> int:
    """Real roots of B_{p+1} over the whole line, from the positive zeros.

    B_{p+1}(1 - x) = +-B_{p+1}(x) maps roots in (-inf, 0] onto [1, inf), so
    the full count is the positive count plus the zeros at a >= 1.  A zero
    at a = 1 shows up as a bracket straddling 1.
    """
    return len(zeros) + sum(1 for z in zeros if z.a_hi >= 1)


def _bound_checks(p: float, zeros: Sequence[ZeroRecord]) -> Dict[str, bool]:
    n = len(zeros)
    A = zeros[-1].root if zeros else float("-inf")
    a_lo, a_hi = bounds.A_bounds(p)
    n_lo, n_hi = bounds.N_bounds(p)
    checks = {
        "A_lower": a_lo < A,
        "A_upper": A < a_hi,
        "N_lower": n_lo < n,
        "N_upper": n < n_hi,
    }
    if float(p).is_integer():
        m = int(p) + 1
        total = _count_all_roots(zeros)
        ba_lo, ba_hi = bounds.bernoulli_A_bounds(m)
        bn_lo, bn_hi = bounds.bernoulli_N_bounds(m)
        checks.update({
            "bernoulli_A_lower": ba_lo < A,
            "bernoulli_A_upper": A < ba_hi,
            "bernoulli_N_lower": bn_lo < total,
            "bernoulli_N_upper": total < bn_hi,
        })
    return checks


def census(
    p: float,
    cfg: EvalConfig = DEFAULT_CONFIG,
    step: float = DEFAULT_STEP,
    root_tolerance: float = DEFAULT_ROOT_TOLERANCE,
    p_min: float = P_MIN,
) -> ZeroCensus:
    """All zeros of zeta(-p, .) on a > 0, with the N(p) and A(p) bound checks."""
    if p < p_min:
        raise DomainError(
            f"floating census needs p >= {p_min}; use bernoulli_census(p + 1) "
            "for small integer p"
        )
    zeros = find_zeros(p, cfg, step, root_tolerance)
    return ZeroCensus(float(p), tuple(zeros), _bound_checks(p, zeros))


# ------------------------------------------------------------- negativity


@dataclass(frozen=True)
class NegativityReport:
    p: float
    boundary: float
    samples: Tuple[Tuple[float, int, float], ...]  # (a, sign, log|zeta(-p, a)|)
    failures: Tuple[Tuple[float, str], ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def negativity_points(p: float, sample_count: int = 64, tail_count: int = 16) -> List[float]:
    edge = bounds.negativity_edge(p)
    pts = [edge + p * k / sample_count for k in range(1, sample_count + 1)]
    far = 10 * p
    if far > pts[-1]:
        ratio = (far / pts[-1]) ** (1 / tail_count)
        pts += [pts[-1] * ratio**k for k in range(1, tail_count + 1)]
    return pts


def negativity_certificate(
    p: float,
    sample_count: int = 64,
    cfg: EvalConfig = DEFAULT_CONFIG,
    p_min: float = P_MIN,
) -> NegativityReport:
    """Sample zeta(-p, a) beyond the negativity edge and demand every sign be -1."""
    if p < p_min:
        raise DomainError(f"p must be at least {p_min}")
    if sample_count < 1:
        raise DomainError("sample_count must be positive")
    samples, failures = [], []
    for a in negativity_points(p, sample_count):
        r = Z(p, a, cfg)
        log_abs = float(r.log_abs + r.log_scale) if r.sign else float("-inf")
        samples.append((a, r.sign, log_abs))
        if not r.determinate:
            failures.append((a, "indeterminate sign"))
        elif r.sign != -1:
            failures.append((a, "non-negative value"))
    return NegativityReport(float(p), bounds.negativity_edge(p), tuple(samples), tuple(failures))


# ----------------------------------------------------------------- Inkeri


@dataclass(frozen=True)
class InkeriRow:
    m: int
    N: int
    A_lo: Fraction
    A_hi: Fraction
    positive_count: int
    checks: Optional[Dict[str, bool]]  # None below the asserted range

    @property
    def A(self) -> float:
        return float((self.A_lo + self.A_hi) / 2)

    @property
    def N_ratio(self) -> float:
        """N(m) pi e / (2m); tends to 1."""
        return self.N * bounds.PI_E / (2 * self.m)

    @property
    def A_ratio(self) -> float:
        """A(m) 2 pi e / m; tends to 1."""
        return self.A * bounds.TWO_PI_E / self.m

    @property
    def passed(self) -> bool:
        return self.checks is None or all(self.checks.values())


def inkeri_row(m: int, m_min: int = INKERI_M_MIN) -> InkeriRow:
    if m < 2:
        raise DomainError("m must be at least 2")
    c: BernoulliCensus = bernoulli_census(m)
    checks = None
    if m >= m_min:
        a_lo, a_hi = bounds.bernoulli_A_bounds(m)
        n_lo, n_hi = bounds.bernoulli_N_bounds(m)
        A = c.A
        checks = {
            "A_lower": a_lo < A,
            "A_upper": A < a_hi,
            "N_lower": n_lo < c.N,
            "N_upper": c.N < n_hi,
        }
    return InkeriRow(m, c.N, c.A_lo, c.A_hi, c.positive_count, checks)


def inkeri_report(m_list: Iterable[int], m_min: int = INKERI_M_MIN) -> List[InkeriRow]:
    return [inkeri_row(m, m_min) for m in m_list]


# ------------------------------------------------------------ Rolle cap


@dataclass(frozen=True)
class RootCapReport:
    p: float
    interval: Tuple[float, float]
    n: int
    derivative_sign: Optional[int]  # None when not constant or undecided
    zero_count: int
    inconclusive: bool
    passed: bool
    zeros: Tuple[ZeroRecord, ...] = field(default=())


def derivative_root_cap(
    p: float,
    interval: Tuple[float, float],
    n: int,
    cfg: EvalConfig = DEFAULT_CONFIG,
    samples: int = 256,
    zeros: Optional[Sequence[ZeroRecord]] = None,
    p_min: float = P_MIN,
) -> RootCapReport:
    """If the n-th derivative (2 pi)^n Z_{p-n} keeps one sign on the interval,
    Z_p has at most n zeros there.  Checks the hypothesis on a grid and the
    conclusion against the census zeros."""
    if n < 0:
        raise DomainError("n must be non-negative")
    if p - n <= p_min:
        raise DomainError(f"need p - n > {p_min}")
    lo, hi = map(float, interval)
    if not 0 < lo < hi:
        raise DomainError("interval must satisfy 0 < lo < hi")
    if zeros is None:
        zeros = find_zeros(p, cfg)
    inside = tuple(z for z in zeros if lo < z.root < hi)
    signs = set()
    inconclusive = False
    for k in range(samples + 1):
        a = lo + (hi - lo) * k / samples
        r = Z_derivative(p, a, cfg, order=n) if n else Z(p, a, cfg)
        if not r.determinate:
            inconclusive = True
        else:
            signs.add(r.sign)
    sign = signs.pop() if len(signs) == 1 and not inconclusive else None
    passed = sign is not None and len(inside) <= n
    return RootCapReport(float(p), (lo, hi), n, sign, len(inside), inconclusive, passed, inside)
