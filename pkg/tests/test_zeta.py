import math
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from hurwitz_zeros import (
    ConvergenceError,
    DomainError,
    EvalConfig,
    Z,
    Z_derivative,
    fourier_Z,
    generate_bernoulli,
    hurwitz_zeta,
    lift_correction,
    log_Q,
    zeta_at_negative_integer,
)
from hurwitz_zeros.bounds import (
    shift_sum_bound,
    stirling_log_bounds,
    theorem1_bound,
    zeta_tail_bound,
)

TAIL_C = math.pi**2 / 6 - 0.75


def exact_Z(p: int, a: F) -> mpf:
    v = zeta_at_negative_integer(p, a)
    with mp.workprec(400):
        return (mpf(v.numerator) / v.denominator) / (2 * mp.gamma(1 + p) / (2 * mp.pi) ** (1 + p))


def close(result, ref) -> bool:
    with mp.workprec(400):
        return abs(result.normalized - ref) <= result.err_bound


# ---------------------------------------------------------------- config


@pytest.mark.parametrize(
    "kwargs",
    [{"precision_bits": 52}, {"tail_epsilon": 0}, {"max_terms": 0},
     {"precision_bits": 256, "max_precision_bits": 128}],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        EvalConfig(**kwargs)


# ------------------------------------------------------------ normalizer


def test_log_Q_small_values():
    with mp.workprec(200):
        assert abs(log_Q(0).log_Q + mp.log(mp.pi)) < mpf(2) ** -150
        assert abs(log_Q(1).Q - 1 / (2 * mp.pi**2)) < mpf(2) ** -120


def test_log_Q_rejects_negative():
    with pytest.raises(DomainError):
        log_Q(-0.5)


def test_log_Q_never_overflows():
    lq = log_Q(10**7).log_Q
    assert mp.isfinite(lq) and lq > 10**7


@pytest.mark.parametrize("p", [1, 2.5, 7, 30, 99.75, 400, 5000])
def test_log_Q_recurrence_within_8_ulps(p):
    cfg = EvalConfig()
    a, b = log_Q(p, cfg).log_Q, log_Q(p - 1, cfg).log_Q
    with mp.workprec(400):
        diff = abs(a - mp.log(mpf(p) / (2 * mp.pi)) - b)
        ulp = mpf(2) ** (mp.floor(mp.log(abs(a), 2)) + 1 - cfg.precision_bits)
        assert diff <= 8 * ulp


def test_log_Q_inside_stirling_enclosure_at_100():
    lq = log_Q(100).log_Q
    with mp.workprec(300):
        lgamma = lq - mp.log(2) + 101 * mp.log(2 * mp.pi)
        lo, hi = stirling_log_bounds(100, 300)
        assert lo < lgamma < hi


# --------------------------------------------------------------- Fourier


def test_fourier_matches_exact_at_p20_half():
    r = fourier_Z(20, F(1, 2))
    assert close(r, exact_Z(20, F(1, 2)))


@settings(max_examples=30, deadline=None)
@given(st.floats(min_value=1e-3, max_value=1.0))
def test_fourier_p10_close_to_leading_sine(b):
    r = fourier_Z(10, b)
    with mp.workprec(200):
        dev = abs(r.normalized - mp.sin(2 * mp.pi * mpf(b) - 5 * mp.pi))
    assert dev < TAIL_C * 2**-10


def test_fourier_zero_at_p2_b1():
    r = fourier_Z(2, 1, EvalConfig(tail_epsilon=1e-10))
    assert abs(float(r.normalized)) <= r.err_bound
    assert r.err_bound < 1e-9


def test_fourier_single_term_error_meets_tail_bound():
    # tail_epsilon above 1/p forces R = 1
    r = fourier_Z(10, 0.3, EvalConfig(tail_epsilon=0.5))
    assert r.err_bound <= zeta_tail_bound(10)


@pytest.mark.parametrize("b", [0, -0.1, 1.5])
def test_fourier_rejects_b_outside_unit_interval(b):
    with pytest.raises(DomainError):
        fourier_Z(10, b)


def test_fourier_reports_term_cap():
    with pytest.raises(ConvergenceError):
        fourier_Z(1, 0.3, EvalConfig(max_terms=1000))


# ------------------------------------------------------------------- lift


def test_lift_empty_sum():
    assert lift_correction(7, 0.4, 0).normalized == 0


@pytest.mark.parametrize("p", [3, 50.5, 200])
def test_lift_single_unit_term(p):
    r = lift_correction(p, 1, 1)
    with mp.workprec(300):
        assert abs(r.normalized - mp.exp(-log_Q(p).log_Q)) <= r.err_bound + mpf(2) ** -120 * abs(r.normalized)


def test_lift_below_shift_sum_bound():
    r = lift_correction(50, F(1, 2), 2)
    assert r.normalized < shift_sum_bound(50, 2)


# ---------------------------------------------------------------------- Z


def test_Z_matches_exact_p30_a23_tenths():
    assert close(Z(30, F(23, 10)), exact_Z(30, F(23, 10)))


def test_Z_theorem1_bound_at_p100():
    a = 0.6
    r = Z(100, a)
    with mp.workprec(200):
        dev = abs(r.normalized - mp.sin(2 * mp.pi * mpf(a) - 50 * mp.pi))
    assert dev < theorem1_bound(100, a)


def test_Z_zero_at_p2_a1():
    r = Z(2, 1)
    assert abs(r.normalized) <= r.err_bound
    assert not r.determinate


@pytest.mark.parametrize("p,a", [(0, 1), (-1, 1), (5, 0), (5, -2)])
def test_Z_domain(p, a):
    with pytest.raises(DomainError):
        Z(p, a)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=5, max_value=45), st.fractions(min_value=F(1, 20), max_value=8, max_denominator=40))
def test_Z_agrees_with_exact_oracle(p, a):
    assert close(Z(p, a), exact_Z(p, a))


@settings(max_examples=15, deadline=None)
@given(st.floats(min_value=10.0, max_value=120.0), st.floats(min_value=0.05, max_value=9.0))
def test_Z_agrees_with_mpmath_for_real_p(p, a):
    r = Z(p, a)
    with mp.workprec(400):
        q = 2 * mp.gamma(1 + mpf(p)) / (2 * mp.pi) ** (1 + mpf(p))
        ref = mpmath.zeta(-mpf(p), mpf(a)) / q
        assert abs(r.normalized - ref) <= r.err_bound + mpf(10) ** -60


def test_Z_escalates_until_sign_is_certain():
    # Z_12 vanishes at 1/2 exactly; a nearby point needs more than 53 bits
    cfg = EvalConfig(precision_bits=53, tail_epsilon=1e-12)
    r = Z(12, F(1, 2) + F(1, 2**60), cfg)
    assert r.determinate and r.precision_bits > 53


def test_result_representation_invariants():
    for r in (Z(40, 3.3), hurwitz_zeta(-40.5, 3.3), hurwitz_zeta(-300.5, 40.1)):
        if r.value is not None:
            with mp.workprec(r.precision_bits):
                assert int(mp.sign(r.value)) == r.sign
                assert abs(mp.log(abs(r.value)) - r.log_abs) <= mpf(2) ** (-r.precision_bits // 2)
    zero = hurwitz_zeta(-2, 1)
    assert zero.sign == 0 and zero.log_abs == mpf("-inf")
    big = hurwitz_zeta(-300.5, 40.1)
    assert big.value is None and big.log_abs > 700


# ------------------------------------------------------------- derivative


def test_derivative_matches_exact_polynomial():
    # d/da of -B_4(a)/(4 Q(-3)) equals -B_4'(a) / (4 Q(-3))
    a = F(7, 5)
    dB4 = generate_bernoulli(4).derivative()
    num = -dB4(a) / 4
    with mp.workprec(300):
        ref = (mpf(num.numerator) / num.denominator) / (2 * mp.gamma(4) / (2 * mp.pi) ** 4)
    assert close(Z_derivative(3, a), ref)


def test_derivative_near_cosine_at_p21():
    r = Z_derivative(21, 0.5)
    with mp.workprec(200):
        lead = 2 * mp.pi * mp.cos(2 * mp.pi * mpf(0.5) - mp.pi * 21 / 2)
        assert abs(r.normalized - lead) < 1e-5


def test_derivative_propagates_indeterminate():
    # Z_{p-1} = Z_2 vanishes at a = 1
    assert not Z_derivative(3, 1).determinate


def test_higher_derivative_scales_by_two_pi():
    r2 = Z_derivative(30, 2.2, order=2)
    base = Z(28, 2.2)
    with mp.workprec(200):
        assert abs(r2.normalized - (2 * mp.pi) ** 2 * base.normalized) <= r2.err_bound


def test_derivative_domain():
    with pytest.raises(DomainError):
        Z_derivative(1, 0.5)


# ------------------------------------------------------------ hurwitz_zeta


@pytest.mark.parametrize("a", [F(1, 4), F(3), F(7, 9)])
def test_sigma_zero_is_half_minus_a(a):
    r = hurwitz_zeta(0, a)
    with mp.workprec(200):
        assert abs(r.value - (mpf(1) / 2 - mpf(a.numerator) / a.denominator)) <= r.err_bound


def test_half_parameter_identity_at_minus_three(reference):
    r = hurwitz_zeta(-3, F(1, 2))
    # (2^-3 - 1) * zeta(-3) with zeta(-3) = 1/120
    with mp.workprec(200):
        ref = mpf(reference["special_values"]["zeta(-3,1/2)"])
        assert abs(r.value - ref) < 1e-35
        assert abs(r.value + mpf(7) / 960) < 1e-35


def test_fixture_oracle_points(reference):
    for pt in reference["oracle_points"]:
        r = Z(pt["p"], F(pt["a"]))
        with mp.workprec(200):
            assert abs(r.normalized - mpf(pt["Z"])) <= r.err_bound + mpf(10) ** -38


def test_zeta_two_at_one(reference):
    r = hurwitz_zeta(2, 1)
    with mp.workprec(200):
        assert abs(r.value - mp.pi**2 / 6) <= r.err_bound
        assert abs(r.value - mpf(reference["special_values"]["zeta(2,1)"])) < 1e-30


@pytest.mark.parametrize("sigma", [1, 0.5, 0.999])
def test_pole_and_strip_rejected(sigma):
    with pytest.raises(DomainError):
        hurwitz_zeta(sigma, 1)


def test_nonpositive_a_rejected():
    with pytest.raises(DomainError):
        hurwitz_zeta(-2.5, 0)


@settings(max_examples=15, deadline=None)
@given(st.floats(min_value=1.05, max_value=30.0), st.floats(min_value=0.01, max_value=20.0))
def test_direct_branch_against_mpmath(sigma, a):
    r = hurwitz_zeta(sigma, a)
    with mp.workprec(300):
        assert abs(r.value - mpmath.zeta(mpf(sigma), mpf(a))) <= r.err_bound + mpf(10) ** -70


@settings(max_examples=15, deadline=None)
@given(st.floats(min_value=-80.0, max_value=-0.01), st.floats(min_value=0.01, max_value=6.0))
def test_negative_branch_against_mpmath(sigma, a):
    if float(sigma).is_integer():
        return
    r = hurwitz_zeta(sigma, a)
    with mp.workprec(400):
        ref = mpmath.zeta(mpf(sigma), mpf(a))
        scale = mp.exp(r.log_scale)
        assert abs(r.normalized * scale - ref) <= (r.err_bound + mpf(10) ** -80) * scale
