"""Hurwitz zeta evaluation for real arguments.

The workhorse is the normalized function

    Z_p(a) = zeta(-p, a) / Q(-p),   Q(-p) = 2 Gamma(1 + p) / (2 pi)^(1 + p),

which stays O(1) on the band where the real zeros live even when zeta(-p, a)
itself is astronomically large.  It is assembled from Hurwitz's Fourier
series on 0 < b <= 1 and the shift relation zeta(s, n + b) = zeta(s, b) -
sum_{r<n} (r + b)^(-s).  Anything that can overflow is handled in log space.

Every result carries an a-posteriori absolute error bound on the normalized
quantity; when that bound swallows the value the evaluation is repeated at
doubled precision until the sign is certain or the ceiling is reached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

import mpmath
import numpy as np
from mpmath import mp, mpf

from .bernoulli import bernoulli_number, zeta_at_negative_integer
from .errors import ConvergenceError, DomainError

__all__ = [
    "DEFAULT_CONFIG",
    "EvalConfig",
    "EvalResult",
    "NormalizerQ",
    "Z",
    "Z_derivative",
    "euler_maclaurin_zeta",
    "fourier_Z",
    "hurwitz_zeta",
    "lift_correction",
    "log_Q",
]

GUARD_BITS = 24
# above this many multiprecision head terms the Euler-Maclaurin route is cheaper
MAX_HEAD_TERMS = 20_000
# |log| range of values that fit a double
LINEAR_LOG_LIMIT = 700
_FLOAT_CHUNK = 1 << 20


@dataclass(frozen=True)
class EvalConfig:
    precision_bits: int = 128
    tail_epsilon: float = 1e-30
    max_terms: int = 10_000_000
    max_precision_bits: int = 1024

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")
        if not self.tail_epsilon > 0:
            raise ValueError("tail_epsilon must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if self.max_precision_bits < self.precision_bits:
            raise ValueError("max_precision_bits must be >= precision_bits")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class EvalResult:
    """A real value held as sign and log-magnitude.

    ``normalized`` is the O(1) quantity actually summed (Z_p(a), or zeta
    itself when sigma > 1); the full value is ``normalized * exp(log_scale)``.
    ``err_bound`` bounds the absolute error of ``normalized``.  ``value`` is
    None when the full magnitude does not fit a double.
    """

    sign: int
    log_abs: mpf
    value: Optional[mpf]
    err_bound: mpf
    precision_bits: int
    determinate: bool = True
    log_scale: mpf = mpf(0)
    method: str = ""
    normalized: mpf = mpf(0)

    def __float__(self) -> float:
        if self.value is None:
            return self.sign * math.inf
        return float(self.value)


def _result(norm, err, prec: int, method: str, log_scale=0) -> EvalResult:
    with mp.workprec(prec + GUARD_BITS):
        norm = +norm
        err = abs(mpf(err))
        log_scale = mpf(log_scale)
        sign = int(mp.sign(norm))
        if sign == 0:
            log_abs = mpf("-inf")
            value: Optional[mpf] = mpf(0)
        else:
            log_abs = mp.log(abs(norm)) + log_scale
            if log_scale == 0:
                value = norm
            elif abs(log_abs) <= LINEAR_LOG_LIMIT:
                value = sign * mp.exp(log_abs)
            else:
                value = None
    determinate = bool(abs(norm) > err)
    return EvalResult(sign, log_abs, value, err, prec, determinate, log_scale, method, norm)


def _mpf(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def _input_rounding(x, wprec: int) -> mpf:
    """Bound on |mpf(x) - x| for an input at working precision."""
    if isinstance(x, (int, float)) and wprec >= 53:
        return mpf(0)
    if isinstance(x, Fraction):
        d = x.denominator
        if d & (d - 1) == 0 and abs(x.numerator).bit_length() <= wprec:
            return mpf(0)
    return abs(_mpf(x)) * mpf(2) ** (-wprec)


# ---------------------------------------------------------------- normalizer


@dataclass(frozen=True)
class NormalizerQ:
    p: mpf
    log_Q: mpf

    @property
    def Q(self) -> mpf:
        return mp.exp(self.log_Q)


def log_Q(p, cfg: EvalConfig = DEFAULT_CONFIG) -> NormalizerQ:
    """log Q(-p) = log(2 Gamma(1+p)) - (1+p) log(2 pi), for p >= 0."""
    if p < 0:
        raise DomainError("log_Q needs p >= 0")
    # extra bits: log Q is large and feeds every exponent downstream
    with mp.workprec(cfg.precision_bits + 2 * GUARD_BITS + 16):
        pm = _mpf(p)
        lq = mp.loggamma(pm + 1) + mp.log(2) - (pm + 1) * mp.log(2 * mp.pi)
    return NormalizerQ(pm, lq)


# ----------------------------------------------------------- Fourier series


def _truncation_terms(p: mpf, eps) -> int:
    """First R with R^(-p)/p < eps."""
    estimate = (p * eps) ** (-1 / p)
    if estimate > 2**62:
        return int(estimate) + 1  # far beyond any term cap; no need to be exact
    R = max(int(mp.floor(estimate)), 1)
    while mpf(R) ** (-p) / p >= eps:
        R += 1
    while R > 1 and mpf(R - 1) ** (-p) / p < eps:
        R -= 1
    return R


def _remainder_bound(p: mpf, R: int) -> mpf:
    """Bound on sum_{r > R} r^(-1-p)."""
    bound = min(mpf(R) ** (-p) / p, mpf(R + 1) ** (-1 - p) + mpf(R + 1) ** (-p) / p)
    if R == 1 and p > 4:
        bound = min(bound, (mp.zeta(2) - mpf(3) / 4) * mpf(2) ** (-p))
    return bound


def _float_tail(p: mpf, b: mpf, r0: int, r1: int) -> Tuple[mpf, mpf]:
    """sum_{r=r0}^{r1} sin(pi(2rb - p/2)) r^(-1-p) in double precision, with
    a bound on the accumulated error."""
    if r0 > r1:
        return mpf(0), mpf(0)
    pf, bf = float(p), float(b)
    parts = []
    err = 0.0
    for start in range(r0, r1 + 1, _FLOAT_CHUNK):
        r = np.arange(start, min(start + _FLOAT_CHUNK, r1 + 1), dtype=np.float64)
        phase = np.fmod(2.0 * r * bf - 0.5 * pf, 2.0)
        w = r ** (-1.0 - pf)
        parts.append(np.sin(np.pi * phase) * w)
        # phase error from rounding b, the product and p/2; pow and sin ulps
        err += float(np.sum(w * (np.pi * (3.0 * r + pf + 3.0) + pf * np.log(r) + 4.0)))
    terms = np.concatenate(parts)
    total = math.fsum(terms)
    err = 2.0 * (err * 2.0**-50 + abs(total) * 2.0**-52)
    return mpf(total), mpf(err)


def _check_b(b) -> None:
    if not 0 < b <= 1:
        raise DomainError("the Fourier representation needs 0 < b <= 1")


def _fourier_plan(p: mpf, eps) -> Tuple[int, int]:
    R = _truncation_terms(p, eps)
    head_target = eps * mpf(2) ** 48 / R
    R_head = min(R, _truncation_terms(p, head_target))
    return R, R_head


def _fourier_sum(p: mpf, b: mpf, R: int, R_head: int, wprec: int) -> Tuple[mpf, mpf]:
    head = mpf(0)
    for r in range(1, R_head + 1):
        head += mp.sinpi(2 * r * b - p / 2) * mpf(r) ** (-1 - p)
    tail, tail_err = _float_tail(p, b, R_head + 1, R)
    err = _remainder_bound(p, R) + tail_err + (R_head + 8) * 4 * mpf(2) ** (-wprec)
    return head + tail, err


def fourier_Z(p, b, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Z_p(b) = sum_{r>=1} sin(2 pi r b - pi p / 2) / r^(1+p) for 0 < b <= 1."""
    if not p > 0:
        raise DomainError("fourier_Z needs p > 0")
    _check_b(b)
    wprec = cfg.precision_bits + GUARD_BITS
    with mp.workprec(wprec):
        pm, bm = _mpf(p), _mpf(b)
        R, R_head = _fourier_plan(pm, cfg.tail_epsilon)
        if R > cfg.max_terms:
            raise ConvergenceError(
                f"Fourier series for p={p} needs {R} terms (max_terms={cfg.max_terms})"
            )
        value, err = _fourier_sum(pm, bm, R, R_head, wprec)
        err += 2 * mp.pi * (1 + 1 / pm) * _input_rounding(b, wprec)
        return _result(value, err, cfg.precision_bits, "fourier")


# ------------------------------------------------------------- shift terms


def _lift(pm: mpf, bm: mpf, n: int, lq: mpf, wprec: int, db: mpf) -> Tuple[mpf, mpf]:
    total = mpf(0)
    sensitivity = mpf(0)
    worst = mpf(0)
    for r in range(n):  # (r + b)^p grows with r: smallest first
        e = pm * mp.log(r + bm) - lq
        t = mp.exp(e)
        total += t
        sensitivity += t / (r + bm)
        worst = max(worst, abs(e), abs(lq))
    err = total * mpf(2) ** (-wprec) * (2 * (worst + 4) + n + 4) + pm * db * sensitivity
    return total, err


def lift_correction(p, b, n: int, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """sum_{r=0}^{n-1} (r + b)^p / Q(-p), summed in log space."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if not p > 0:
        raise DomainError("lift_correction needs p > 0")
    _check_b(b)
    wprec = cfg.precision_bits + GUARD_BITS
    with mp.workprec(wprec):
        pm, bm = _mpf(p), _mpf(b)
        lq = log_Q(pm, replace(cfg, precision_bits=cfg.precision_bits)).log_Q
        total, err = _lift(pm, bm, n, lq, wprec, _input_rounding(b, wprec))
        return _result(total, err, cfg.precision_bits, "lift")


# ------------------------------------------------------- Euler-Maclaurin


def _rising(s: mpf, k: int) -> mpf:
    out = mpf(1)
    for j in range(k):
        out *= s + j
    return out


def euler_maclaurin_zeta(sigma, a, cfg: EvalConfig = DEFAULT_CONFIG, target=None) -> Tuple[mpf, mpf]:
    """zeta(sigma, a) by Euler-Maclaurin summation with a rigorous remainder.

    Returns ``(value, err_bound)`` on the linear scale.  ``target`` is the
    absolute accuracy wanted; by default ``tail_epsilon`` times the natural
    scale (a^-sigma for sigma > 1, Q(sigma) for sigma < 0).
    """
    if sigma == 1:
        raise DomainError("zeta(s, a) has a simple pole at s = 1")
    if not a > 0:
        raise DomainError("the Hurwitz parameter a must be positive")
    prec = cfg.precision_bits
    with mp.workprec(prec + GUARD_BITS):
        s, am = _mpf(sigma), _mpf(a)
        if s < 0:
            scale_log = log_Q(-s, cfg).log_Q
        else:
            scale_log = -s * mp.log(am)
        if target is None:
            target = cfg.tail_epsilon * mp.exp(scale_log)
        target = mpf(target)
        N, M = _em_plan(s, am, target)
        # magnitude of the largest partial-sum term sets the cancellation
        big = max(mpf(0), -s * mp.log(am + N)) + mp.log(N + 1)
        guard = int(max(mpf(0), (big - scale_log) / mp.log(2))) + GUARD_BITS
    wprec = prec + guard
    with mp.workprec(wprec):
        s, am = _mpf(sigma), _mpf(a)
        total = mpf(0)
        absum = mpf(0)
        for r in range(N):
            t = (am + r) ** (-s)
            total += t
            absum += abs(t)
        x = am + N
        em = x ** (1 - s) / (s - 1) + x ** (-s) / 2
        absum += abs(em)
        for k in range(1, M + 1):
            coef = _mpf(bernoulli_number(2 * k)) / math.factorial(2 * k)
            t = coef * _rising(s, 2 * k - 1) * x ** (-s - 2 * k + 1)
            em += t
            absum += abs(t)
        total += em
        rem = _em_remainder(s, x, M)
        err = rem + absum * mpf(2) ** (-wprec) * (N + M + 8)
        err += abs(s) * _input_rounding(a, wprec) * absum / am
        return +total, err


def _em_remainder(s: mpf, x: mpf, M: int) -> mpf:
    poch = _rising(s, 2 * M)
    if poch == 0:
        return mpf(0)
    return 4 * abs(poch) / (2 * mp.pi) ** (2 * M) * x ** (-s - 2 * M + 1) / (s + 2 * M - 1)


def _em_plan(s: mpf, a: mpf, target: mpf) -> Tuple[int, int]:
    """Smallest-effort (N, M) whose remainder bound meets ``target``."""
    N = max(8, int(abs(s) / (2 * mp.pi)) + 8)
    while True:
        x = a + N
        two_pi = 2 * mp.pi
        # |(s)_{2M}| / (2 pi)^{2M} * x^{-s-2M+1}, updated two factors at a time
        M = 1
        factor = abs(s * (s + 1)) / two_pi**2 * x ** (-s - 1)
        prev = None
        while M <= 400:
            if factor == 0:
                return N, M
            if s + 2 * M - 1 > 0:
                bound = 4 * factor / (s + 2 * M - 1)
                if bound <= target:
                    return N, M
                if prev is not None and bound > prev:
                    break  # asymptotic series has turned; widen the head
                prev = bound
            factor *= abs((s + 2 * M) * (s + 2 * M + 1)) / (two_pi * x) ** 2
            M += 1
        N *= 2


# ------------------------------------------------------------- assembly


def _split(a) -> Tuple[int, mpf]:
    am = _mpf(a)
    n = int(mp.ceil(am)) - 1
    b = am - n
    if b <= 0:  # rounding put a on an integer boundary
        n -= 1
        b += 1
    return n, b


def _Z_once(p, a, prec: int, eps, cfg: EvalConfig) -> EvalResult:
    wprec = prec + GUARD_BITS
    with mp.workprec(wprec):
        pm = _mpf(p)
        n, bm = _split(a)
        da = _input_rounding(a, wprec)
        R, R_head = _fourier_plan(pm, eps)
        lq = log_Q(pm, replace(cfg, precision_bits=prec)).log_Q
        if R <= cfg.max_terms and R_head <= MAX_HEAD_TERMS:
            four, err_f = _fourier_sum(pm, bm, R, R_head, wprec)
            err_f += 2 * mp.pi * (1 + 1 / pm) * da
            lift, err_l = _lift(pm, bm, n, lq, wprec, da)
            return _result(four - lift, err_f + err_l, prec, "fourier")
        sub = replace(cfg, precision_bits=prec, max_precision_bits=max(prec, cfg.max_precision_bits))
        value, err = euler_maclaurin_zeta(-pm, a, sub, target=eps * mp.exp(lq))
        scale = mp.exp(-lq)
        return _result(value * scale, err * scale, prec, "euler-maclaurin")


def Z(p, a, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """Normalized Hurwitz zeta Z_p(a) = zeta(-p, a) / Q(-p) for p > 0, a > 0.

    Escalates precision (doubling, tail target shrunk alike) while the value
    is not separated from zero by its error bound; the returned result has
    ``determinate=False`` if the ceiling was hit first.
    """
    if not p > 0:
        raise DomainError("Z needs p > 0")
    if not a > 0:
        raise DomainError("the Hurwitz parameter a must be positive")
    prec, eps = cfg.precision_bits, mpf(cfg.tail_epsilon)
    while True:
        res = _Z_once(p, a, prec, eps, cfg)
        if res.determinate or 2 * prec > cfg.max_precision_bits:
            return res
        eps = eps * mpf(2) ** (-prec)
        prec *= 2


def Z_derivative(p, a, cfg: EvalConfig = DEFAULT_CONFIG, order: int = 1) -> EvalResult:
    """d^k/da^k Z_p(a) = (2 pi)^k Z_{p-k}(a)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if order == 0:
        return Z(p, a, cfg)
    if not p - order > 0:
        raise DomainError(f"the order-{order} derivative needs p > {order}")
    base = Z(p - order, a, cfg)
    with mp.workprec(base.precision_bits + GUARD_BITS):
        factor = (2 * mp.pi) ** order
        res = _result(base.normalized * factor, base.err_bound * factor,
                      base.precision_bits, base.method)
    return replace(res, determinate=base.determinate and res.determinate)


def _is_integer(x) -> bool:
    return float(x).is_integer() if not isinstance(x, Fraction) else x.denominator == 1


def hurwitz_zeta(sigma, a, cfg: EvalConfig = DEFAULT_CONFIG) -> EvalResult:
    """zeta(sigma, a) for real sigma outside [0, 1) \\ {0} and a > 0.

    sigma > 1: Euler-Maclaurin summation of the defining series.
    sigma a non-positive integer: exact Bernoulli value, then rounded.
    other sigma < 0: Q(sigma) * Z(-sigma, a), kept in log space.
    """
    if sigma == 1:
        raise DomainError("zeta(s, a) has a simple pole at s = 1 (residue 1)")
    if 0 < sigma < 1:
        raise DomainError("the critical strip 0 < sigma < 1 is not supported")
    if not a > 0:
        raise DomainError("the Hurwitz parameter a must be positive")
    prec = cfg.precision_bits
    if sigma > 1:
        value, err = euler_maclaurin_zeta(sigma, a, cfg)
        return _result(value, err, prec, "euler-maclaurin")
    if _is_integer(sigma):
        exact = zeta_at_negative_integer(int(-Fraction(sigma)), Fraction(a))
        with mp.workprec(prec + GUARD_BITS):
            value = _mpf(exact)
            res = _result(value, abs(value) * mpf(2) ** (-prec), prec, "bernoulli")
        # the sign of an exact rational is never in doubt
        return replace(res, determinate=True)
    p = -_mpf(sigma) if not isinstance(sigma, Fraction) else -sigma
    z = Z(p, a, cfg)
    lq = log_Q(p, cfg).log_Q
    with mp.workprec(z.precision_bits + GUARD_BITS):
        res = _result(z.normalized, z.err_bound, z.precision_bits, z.method, log_scale=lq)
    return replace(res, determinate=z.determinate)
