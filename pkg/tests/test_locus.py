from fractions import Fraction as F

import pytest
from mpmath import mp, mpf

from hurwitz_zeros import DomainError, EvalConfig, generate_bernoulli, isolate_real_roots
from hurwitz_zeros import bounds
from hurwitz_zeros.locus import (
    LocusRow,
    fmt_rational,
    fmt_real,
    locus,
    locus_at,
    mean_main_residual,
    region_label,
    sigma_grid,
)


def test_region_bands():
    p = 200
    assert region_label(p, 0.3) == "IV"
    assert region_label(p, 5.0) == "II"
    assert region_label(p, bounds.main_edge(p) + 0.01) == "III"
    assert region_label(p, bounds.negativity_edge(p) + 0.01) == "I"


@pytest.mark.parametrize("sigma,a", [(-100, mpf("3.7499")), (-57, mpf("2.0001")), (-400, mpf("0.126"))])
def test_residual_in_unit_range(sigma, a):
    row = LocusRow.from_zero(sigma, a, True)
    assert -1 <= row.line_residual <= 1
    with mp.workprec(128):
        assert row.line_residual == sigma + 4 * a + 2 * row.nearest_line_m


def test_rows_on_lattice_have_tiny_residual():
    (out,) = locus(-100, -90, 20)[:1]
    main = [r for r in out.rows if r.main]
    assert main and all(abs(r.line_residual) < 1e-9 for r in main)
    assert all(r.a > 0 for r in out.rows)


def test_sigma_grid():
    assert sigma_grid(-40, -20, 10) == [-40, -30, -20]
    assert sigma_grid(-30, -30, 1) == []
    with pytest.raises(DomainError):
        sigma_grid(-20, -40, 1)
    with pytest.raises(DomainError):
        sigma_grid(-40, -20, 0)


def test_locus_preconditions():
    with pytest.raises(DomainError):
        locus(-20, -5, 1)


@pytest.mark.parametrize("m", [30, 41])
def test_integer_sigma_rows_match_bernoulli_roots(m):
    out = locus_at(-m)
    iso = isolate_real_roots(generate_bernoulli(m + 1), "positive", width=F(1, 2**60))
    assert len(out.rows) == iso.count
    for row, (lo, hi) in zip(out.rows, iso.enclosures()):
        assert abs(row.a - (mpf(lo.numerator) / lo.denominator)) < 1e-12
        assert abs(row.a - (mpf(hi.numerator) / hi.denominator)) < 1e-12


def test_parallel_matches_serial():
    serial = locus(-60, -40, 10)
    par = locus(-60, -40, 10, jobs=2)
    assert [o.sigma for o in par] == [-60, -50, -40]
    assert [[r.as_row() for r in o.rows] for o in serial] == [[r.as_row() for r in o.rows] for o in par]


def test_locus_reports_precision_failure():
    cfg = EvalConfig(precision_bits=53, max_precision_bits=53, tail_epsilon=1e-12)
    # Z_12 vanishes at exactly 1/2; at 53 bits nearby grid points may stay undecided
    out = locus_at(-60, cfg)
    assert out.error is None or out.error.startswith("PrecisionExhausted")


def test_mean_residual():
    rows = [LocusRow.from_zero(-100, mpf(25) + mpf("1e-10") * k, True) for k in range(1, 4)]
    assert float(mean_main_residual(rows)) == pytest.approx(8e-10)
    assert mean_main_residual([]) is None


def test_number_formatting():
    assert fmt_real(-100.0) == "-100"
    assert fmt_real(0.1) == "0.10000000000000000555"
    assert fmt_rational(F(7, 2)) == "7/2" and fmt_rational(F(4)) == "4"
    with mp.workprec(300):
        x, y = mp.pi, mpf("1.5e-14")
    assert fmt_real(x) == "3.1415926535897932385"
    assert fmt_real(y) == "1.5e-14"
