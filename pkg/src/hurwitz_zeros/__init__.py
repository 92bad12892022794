"""Real zeros of the Hurwitz zeta function and Bernoulli polynomials."""

__version__ = "0.1.0"

from .bernoulli import (
    BernoulliCensus,
    RationalPolynomial,
    RootIsolation,
    bernoulli_census,
    eval_exact,
    generate_bernoulli,
    isolate_real_roots,
    zeta_at_negative_integer,
)
from .errors import ConvergenceError, DomainError, PrecisionExhausted
from .locus import LocusRow, locus, region_label
from .verify import run_suite
from .zeros import (
    ZeroCensus,
    ZeroRecord,
    census,
    derivative_root_cap,
    inkeri_report,
    negativity_certificate,
    refine_root,
    scan_and_bracket,
)
from .zeta import (
    EvalConfig,
    EvalResult,
    NormalizerQ,
    Z,
    Z_derivative,
    fourier_Z,
    hurwitz_zeta,
    lift_correction,
    log_Q,
)

__all__ = [
    "BernoulliCensus",
    "ConvergenceError",
    "DomainError",
    "EvalConfig",
    "EvalResult",
    "LocusRow",
    "NormalizerQ",
    "PrecisionExhausted",
    "RationalPolynomial",
    "RootIsolation",
    "Z",
    "ZeroCensus",
    "ZeroRecord",
    "Z_derivative",
    "bernoulli_census",
    "census",
    "derivative_root_cap",
    "eval_exact",
    "fourier_Z",
    "generate_bernoulli",
    "hurwitz_zeta",
    "inkeri_report",
    "isolate_real_roots",
    "lift_correction",
    "locus",
    "log_Q",
    "negativity_certificate",
    "refine_root",
    "region_label",
    "run_suite",
    "scan_and_bracket",
    "zeta_at_negative_integer",
]
