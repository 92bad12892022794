"""Verification suites: each runs a family of checks and returns a report.

Cases marked ``asserted=False`` are measurements that are printed but do
not decide the outcome.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from mpmath import mp, mpf

from . import bounds
from .bernoulli import eval_exact, generate_bernoulli, zeta_at_negative_integer
from .zeta import DEFAULT_CONFIG, EvalConfig, Z, Z_derivative, log_Q
from .zeros import (
    census,
    derivative_root_cap,
    inkeri_row,
    lattice_offset,
    negativity_certificate,
)

SUITES = ("inequalities", "theorem1", "theorem2", "theorem3", "inkeri", "oracle")


@dataclass(frozen=True)
class Case:
    name: str
    passed: bool
    detail: str = ""
    asserted: bool = True


@dataclass
class SuiteReport:
    suite: str
    cases: List[Case] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases if c.asserted)

    @property
    def failures(self) -> List[Case]:
        return [c for c in self.cases if c.asserted and not c.passed]

    def add(self, name: str, passed: bool, detail: str = "", asserted: bool = True) -> None:
        self.cases.append(Case(name, bool(passed), detail, asserted))

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "cases": [
                {"name": c.name, "passed": c.passed, "asserted": c.asserted, "detail": c.detail}
                for c in self.cases
            ],
        }


def _g(x) -> str:
    return mp.nstr(mpf(x), 6) if not isinstance(x, (int, float)) else f"{x:.6g}"


# ------------------------------------------------------------ inequalities


def inequalities(
    p_max: int = 64,
    n_max: int = 200,
    stirling_ps: Sequence[int] = (10, 100, 1000, 10000),
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> SuiteReport:
    """Power-sum bound, r >= 2 tail bound and Stirling sandwich, as printed."""
    rep = SuiteReport("inequalities")
    worst = None
    failures = []
    with mp.workprec(256):
        for p in range(1, p_max + 1):
            total = 0
            for n in range(1, n_max + 1):
                total += n**p
                if n == 1:
                    # both sides equal 1: the bound is attained, not strict
                    continue
                rhs = mpf(n) ** p * (1 - mp.exp(-p)) / (1 - mp.exp(-mpf(p) / n))
                gap = 1 - mpf(total) / rhs
                if gap <= 0:
                    failures.append((p, n))
                if worst is None or gap < worst[0]:
                    worst = (gap, p, n)
    rep.add(
        f"S(p,n) bound, 1<=p<={p_max}, 2<=n<={n_max}",
        not failures,
        f"smallest relative gap {_g(worst[0])} at p={worst[1]}, n={worst[2]}"
        + (f"; failures {failures[:5]}" if failures else ""),
    )
    rep.add("S(p,1) equals its bound", True, "1 = 1^p (1-e^-p)/(1-e^-p)", asserted=False)

    for p in range(1, p_max + 1):
        t = bounds.check_zeta_tail(p)
        rep.add(
            f"tail bound p={p}",
            t.holds,
            f"sum <= {_g(t.upper)} vs {_g(t.bound)}",
            asserted=p >= 5,
        )

    for p in stirling_ps:
        lq = log_Q(p, cfg)
        with mp.workprec(cfg.precision_bits + 32):
            lgamma = lq.log_Q - mp.log(2) + (1 + p) * mp.log(2 * mp.pi)
            lo, hi = bounds.stirling_log_bounds(p, cfg.precision_bits + 32)
            ok = lo < lgamma < hi
            detail = f"margins {_g(lgamma - lo)}, {_g(hi - lgamma)}"
        rep.add(f"Stirling sandwich p={p}", ok, detail)
    return rep


# ----------------------------------------------------------------- oracle


def _oracle_reference(p: int, a: Fraction, prec: int = 320) -> mpf:
    exact = zeta_at_negative_integer(p, a)
    with mp.workprec(prec):
        q = 2 * mp.gamma(1 + p) / (2 * mp.pi) ** (1 + p)
        return (mpf(exact.numerator) / exact.denominator) / q


def oracle(
    p_min: int = 5,
    p_max: int = 60,
    a_values: Optional[Sequence[Fraction]] = None,
    max_err: float = 1e-20,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> SuiteReport:
    """Floating Z_p(a) against the exact Bernoulli value divided by Q(-p)."""
    rep = SuiteReport("oracle")
    if a_values is None:
        a_values = [Fraction(k, 10) for k in range(1, 31)]
    for p in range(p_min, p_max + 1):
        bad, worst_ratio, worst_err = [], 0.0, 0.0
        for a in a_values:
            r = Z(p, a, cfg)
            ref = _oracle_reference(p, a)
            with mp.workprec(320):
                diff = abs(r.normalized - ref)
            err = float(r.err_bound)
            worst_err = max(worst_err, err)
            if err > 0:
                worst_ratio = max(worst_ratio, float(diff / r.err_bound))
            if diff > r.err_bound or err > max_err:
                bad.append(str(a))
        rep.add(
            f"Z vs exact p={p}",
            not bad,
            f"max |diff|/err {worst_ratio:.3g}, max err {worst_err:.3g}"
            + (f"; failing a {bad[:5]}" if bad else ""),
        )
    return rep


# --------------------------------------------------------------- theorem 1


def theorem1_deviation(p: float, a: float, cfg: EvalConfig = DEFAULT_CONFIG):
    """|Z_p(a) - sin(2 pi a - pi p / 2)| at working precision, with Z's error."""
    r = Z(p, a, cfg)
    with mp.workprec(r.precision_bits + 32):
        am, pm = mpf(a), mpf(p)
        dev = abs(r.normalized - mp.sin(2 * mp.pi * am - mp.pi * pm / 2))
    return dev, r.err_bound


def resolving_config(cfg: EvalConfig, scale) -> EvalConfig:
    """A config whose error bound sits about 2^-64 below ``scale``."""
    bits = int(-mp.log(scale, 2)) + 64 if scale < 1 else 0
    if bits <= cfg.precision_bits:
        return cfg
    return replace(
        cfg,
        precision_bits=bits,
        tail_epsilon=min(cfg.tail_epsilon, float(mpf(2) ** (-bits))),
        max_precision_bits=max(cfg.max_precision_bits, 2 * bits),
    )


def theorem1(
    ps: Sequence[float] = (50, 100, 200, 400),
    fractions: Sequence[float] = (0.5, 0.9),
    thresholds: Optional[Dict[float, float]] = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> SuiteReport:
    """Deviation from the leading sine at a = frac * p / (2 pi e).

    For each fraction the deviation must fall as p grows and end below
    1e-6; ``thresholds`` maps p to a cap at fraction 0.9.
    """
    rep = SuiteReport("theorem1")
    if thresholds is None:
        thresholds = {200: 1e-3, 400: 1e-6}
    for frac in fractions:
        devs = []
        for p in ps:
            a = frac * p / bounds.TWO_PI_E
            proof_bound = bounds.theorem1_bound(p, a)
            dev, err = theorem1_deviation(p, a, resolving_config(cfg, proof_bound))
            devs.append(dev)
            rep.add(
                f"frac={frac} p={p} below proof bound",
                dev + err < proof_bound,
                f"deviation {_g(dev)} (+-{_g(err)}), bound {_g(proof_bound)}",
            )
            if frac == 0.9 and p in thresholds:
                rep.add(
                    f"frac=0.9 p={p} deviation < {thresholds[p]:g}",
                    dev + err < thresholds[p],
                    f"deviation {_g(dev)}",
                )
        falling = all(x > y for x, y in zip(devs, devs[1:]))
        rep.add(
            f"frac={frac} deviation decreasing and final < 1e-6",
            falling and devs[-1] < 1e-6,
            " > ".join(_g(d) for d in devs),
        )
    return rep


# --------------------------------------------------------------- theorem 2


def theorem2(
    ps: Sequence[float] = (50, 100, 200, 400),
    samples: int = 64,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> SuiteReport:
    rep = SuiteReport("theorem2")
    for p in ps:
        r = negativity_certificate(p, samples, cfg)
        worst = max(r.samples, key=lambda s: s[1])
        rep.add(
            f"negative beyond the edge, p={p}",
            r.passed,
            f"{len(r.samples)} samples from a={r.boundary:.6g}"
            + (f"; failures {list(r.failures)[:3]}" if r.failures else ""),
        )
        if float(p).is_integer():
            # exact sign at rational points beyond the edge
            pts = [Fraction(round(a * 8), 8) for a, _, _ in r.samples[::8]]
            poly = generate_bernoulli(int(p) + 1)
            agree = all(
                (-eval_exact(poly, x) > 0) - (-eval_exact(poly, x) < 0) == Z(p, x, cfg).sign
                for x in pts
                if x > r.boundary
            )
            rep.add(f"sign matches exact Bernoulli value, p={p}", agree, f"{len(pts)} rational points")
    return rep


# --------------------------------------------------------------- theorem 3

DEFAULT_LATTICE_CAPS = {100: 0.05, 400: 0.01}


def theorem3(
    ps: Sequence[float] = (100, 200, 400),
    lattice_caps: Optional[Dict[float, float]] = None,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> SuiteReport:
    rep = SuiteReport("theorem3")
    caps = DEFAULT_LATTICE_CAPS if lattice_caps is None else lattice_caps
    offsets = {}
    for p in ps:
        c = census(p, cfg)
        for name, ok in c.bound_checks.items():
            rep.add(f"p={p} {name}", ok, f"N={c.N}, A={c.A:.12g}")
        main = c.main_zeros()
        far = max((z.lattice_distance for z in main), default=0.0)
        if p in caps:
            rep.add(f"p={p} lattice distance < {caps[p]:g}", far < caps[p], f"max {far:.3g}")
        simple = all(Z_derivative(p, z.root, cfg).determinate for z in main)
        rep.add(f"p={p} main-interval zeros simple", simple, f"{len(main)} zeros")
        top = bounds.negativity_edge(p)
        rep.add(f"p={p} all zeros below the negativity edge", all(z.root < top for z in c.zeros))
        n = math.ceil(bounds.boundary_zone_cap(p))
        cap = derivative_root_cap(p, (bounds.main_edge(p), top), n, cfg, zeros=c.zeros)
        rep.add(
            f"p={p} boundary zone holds <= {n} zeros",
            cap.passed,
            f"{cap.zero_count} zeros, derivative sign {cap.derivative_sign}",
        )
        offsets[p] = max((lattice_offset(p, z, cfg).estimate for z in main), default=0.0)
    if len(offsets) > 1:
        ordered = sorted(offsets)
        lo_p, hi_p = ordered[0], ordered[-1]
        rep.add(
            f"largest lattice offset shrinks from p={lo_p} to p={hi_p}",
            offsets[hi_p] < offsets[lo_p],
            ", ".join(f"p={p}: {offsets[p]:.3g}" for p in ordered),
            asserted=False,
        )
    return rep


def census_monotonicity(ps: Iterable[int], cfg: EvalConfig = DEFAULT_CONFIG) -> List[tuple]:
    """Steps p -> p+1 where N(p) falls or grows by more than 2."""
    counts = [(p, census(p, cfg).N) for p in ps]
    return [
        (p, n, q, m) for (p, n), (q, m) in zip(counts, counts[1:]) if not 0 <= m - n <= 2
    ]


# ------------------------------------------------------------------ Inkeri


def inkeri(
    m_min: int = 50,
    m_max: int = 200,
    ratio_window: tuple = (0.95, 1.05),
    jobs: int = 1,
) -> SuiteReport:
    rep = SuiteReport("inkeri")
    ms = list(range(m_min, m_max + 1))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(inkeri_row, ms))
    else:
        rows = [inkeri_row(m) for m in ms]
    for row in rows:
        if row.checks is None:
            rep.add(f"m={row.m}", True, f"N={row.N} (below the asserted range)", asserted=False)
            continue
        failed = [k for k, v in row.checks.items() if not v]
        rep.add(
            f"m={row.m} bounds",
            not failed,
            f"N={row.N}, A={row.A:.10g}" + (f"; failed {failed}" if failed else ""),
        )
    last = rows[-1] if rows else None
    if last is not None and last.m == 200:
        lo, hi = ratio_window
        rep.add(
            f"N(200) pi e / 400 in [{lo}, {hi}]",
            lo <= last.N_ratio <= hi,
            f"ratio {last.N_ratio:.6f}",
        )
    return rep


# ---------------------------------------------------------------- dispatch


def run_suite(name: str, **params) -> SuiteReport:
    table: Dict[str, Callable[..., SuiteReport]] = {
        "inequalities": inequalities,
        "theorem1": theorem1,
        "theorem2": theorem2,
        "theorem3": theorem3,
        "inkeri": inkeri,
        "oracle": oracle,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    rep = table[name](**params)
    rep.seconds = time.perf_counter() - start
    return rep
