"""Command-line interface: eval, bernoulli, census, locus, verify.

Exit codes: 0 success, 2 domain error, 3 verification failure,
4 precision ceiling reached.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional, Sequence

from mpmath import mp

from .bernoulli import generate_bernoulli, isolate_real_roots
from .errors import ConvergenceError, DomainError, PrecisionExhausted
from .locus import LOCUS_HEADER, ZERO_HEADER, fmt_rational, fmt_real, locus
from .manifest import RunManifest, write_manifest
from .verify import SUITES, run_suite
from .zeros import DEFAULT_ROOT_TOLERANCE, DEFAULT_STEP, P_MIN, census
from .zeta import EvalConfig, hurwitz_zeta

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_VERIFY = 3
EXIT_PRECISION = 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# ----------------------------------------------------------------- parsing


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _sigma(text: str):
    x = _rational(text)
    return int(x) if x.denominator == 1 else float(x)


def _float_list(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers: {text!r}") from None


def _add_globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--precision-bits", type=int, default=d(128),
                        help="working precision in bits (default 128)")
    parser.add_argument("--tail-epsilon", type=float, default=d(1e-30),
                        help="Fourier truncation target (default 1e-30)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default=d("text"))
    parser.add_argument("--out", default=d(None), help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-zeros",
        description="Hurwitz zeta evaluation, Bernoulli polynomials and real zeros of zeta(-p, a).",
    )
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate zeta(sigma, a)")
    p.add_argument("--sigma", type=_sigma, required=True)
    p.add_argument("--a", type=_rational, required=True, help="decimal or p/q")

    p = sub.add_parser("bernoulli", help="exact Bernoulli polynomial B_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--roots", action="store_true", help="certified real-root isolation")
    p.add_argument("--domain", choices=("all", "positive"), default="all")
    p.add_argument("--width-bits", type=int, default=40,
                   help="refine root intervals below 2^-bits (default 40)")

    p = sub.add_parser("census", help="all real zeros of zeta(-p, a) for a > 0")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--step", type=float, default=DEFAULT_STEP)
    p.add_argument("--tolerance", type=float, default=DEFAULT_ROOT_TOLERANCE)
    p.add_argument("--p-min", type=float, default=P_MIN)

    p = sub.add_parser("locus", help="zero locus rows for sigma on a grid")
    p.add_argument("--sigma-min", type=float, required=True)
    p.add_argument("--sigma-max", type=float, required=True)
    p.add_argument("--sigma-step", type=float, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--p-min", type=int, help="oracle: smallest p (default 5)")
    p.add_argument("--p-max", type=int, help="oracle / inequalities: largest p")
    p.add_argument("--n-max", type=int, help="inequalities: largest n (default 200)")
    p.add_argument("--m-min", type=int, help="inkeri: smallest m (default 50)")
    p.add_argument("--m-max", type=int, help="inkeri: largest m (default 200)")
    p.add_argument("--p-values", type=_float_list,
                   help="theorem1/2/3: comma-separated p values")
    p.add_argument("--samples", type=int, help="theorem2: samples per p (default 64)")
    p.add_argument("--jobs", type=int, default=1, help="inkeri: worker processes")

    for name in ("eval", "bernoulli", "census", "locus", "verify"):
        _add_globals(sub.choices[name], suppress=True)
    return parser


def _config(args) -> EvalConfig:
    try:
        return EvalConfig(
            precision_bits=args.precision_bits,
            tail_epsilon=args.tail_epsilon,
            max_precision_bits=max(1024, args.precision_bits),
        )
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DOMAIN) from None


def _config_echo(args) -> dict:
    return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in sorted(vars(args).items())}


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------- commands


def cmd_eval(args) -> tuple:
    cfg = _config(args)
    r = hurwitz_zeta(args.sigma, args.a, cfg)
    with mp.workprec(r.precision_bits):
        value_err = r.err_bound * mp.exp(r.log_scale)
    fields = {
        "sigma": fmt_real(args.sigma),
        "a": fmt_rational(args.a) if args.a.denominator != 1 else str(args.a.numerator),
        "value": "nan" if r.value is None else fmt_real(r.value),
        "sign": r.sign,
        "log_abs": "-inf" if r.sign == 0 else fmt_real(r.log_abs),
        "err_bound": fmt_real(r.err_bound),
        "value_err_bound": fmt_real(value_err),
        "precision_bits": r.precision_bits,
        "determinate": r.determinate,
        "method": r.method,
    }
    if args.format == "json":
        text = _json_text(fields)
    elif args.format == "csv":
        text = _csv_text(list(fields), [[str(v) for v in fields.values()]])
    else:
        text = "".join(f"{k}: {v}\n" for k, v in fields.items())
    code = EXIT_OK if r.determinate else EXIT_PRECISION
    return text, code, {}


def cmd_bernoulli(args) -> tuple:
    if args.n < 0:
        raise CliError("n must be non-negative", EXIT_DOMAIN)
    poly = generate_bernoulli(args.n)
    iso = None
    if args.roots:
        iso = isolate_real_roots(poly, args.domain, Fraction(1, 2 ** args.width_bits))
    if args.format == "json":
        obj = json.loads(poly.to_json())
        obj["polynomial"] = str(poly)
        if iso is not None:
            obj["roots"] = {
                "domain": args.domain,
                "count": iso.count,
                "exact": [fmt_rational(x) for x in iso.exact_roots],
                "intervals": [[fmt_rational(lo), fmt_rational(hi)] for lo, hi in iso.intervals],
            }
        text = _json_text(obj)
    elif args.format == "csv":
        if iso is None:
            text = _csv_text(("k", "coeff"), [(k, fmt_rational(c)) for k, c in enumerate(poly.coeffs)])
        else:
            rows = [("exact", fmt_rational(x), fmt_rational(x)) for x in iso.exact_roots]
            rows += [("interval", fmt_rational(lo), fmt_rational(hi)) for lo, hi in iso.intervals]
            text = _csv_text(("kind", "lo", "hi"), rows)
    else:
        lines = [str(poly)]
        if iso is not None:
            lines.append(f"{iso.count} distinct real roots ({args.domain})")
            for lo, hi in iso.enclosures():
                if lo == hi:
                    lines.append(fmt_rational(lo) if lo.denominator != 1 else str(lo.numerator))
                else:
                    lines.append(f"in ({fmt_rational(lo)}, {fmt_rational(hi)}) ~ {float((lo + hi) / 2):.15g}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK, {}


def _zero_rows(zeros) -> List[List[str]]:
    return [
        [fmt_real(z.p), fmt_real(z.a_lo), fmt_real(z.a_hi), fmt_real(z.root),
         fmt_rational(z.lattice_point), fmt_real(z.lattice_distance), z.region]
        for z in zeros
    ]


def cmd_census(args) -> tuple:
    if args.p < args.p_min:
        hint = ""
        if float(args.p).is_integer() and args.p >= 0:
            hint = f"; for exact zeros use: bernoulli --n {int(args.p) + 1} --roots --domain positive"
        raise CliError(f"floating census needs p >= {args.p_min:g}{hint}", EXIT_DOMAIN)
    cfg = _config(args)
    start = time.perf_counter()
    c = census(args.p, cfg, step=args.step, root_tolerance=args.tolerance, p_min=args.p_min)
    elapsed = time.perf_counter() - start
    rows = _zero_rows(c.zeros)
    if args.format == "csv":
        text = _csv_text(ZERO_HEADER, rows)
    elif args.format == "json":
        text = _json_text({
            "p": c.p,
            "N": c.N,
            "A": c.A,
            "bound_checks": c.bound_checks,
            "zeros": [dict(zip(ZERO_HEADER, r)) for r in rows],
        })
    else:
        lines = [f"p = {fmt_real(c.p)}", f"N(p) = {c.N}",
                 f"A(p) = {fmt_real(c.A) if c.A is not None else 'none'}", "bound checks:"]
        lines += [f"  {'pass' if ok else 'FAIL'}  {name}" for name, ok in c.bound_checks.items()]
        lines.append("")
        text = "\n".join(lines) + "\n" + _csv_text(ZERO_HEADER, rows)
    code = EXIT_OK if c.passed else EXIT_VERIFY
    return text, code, {"per_p_seconds": {fmt_real(c.p): round(elapsed, 4)}}


def cmd_locus(args) -> tuple:
    cfg = _config(args)
    outcomes = locus(args.sigma_min, args.sigma_max, args.sigma_step, cfg, jobs=args.jobs)
    rows = [r for o in outcomes for r in o.rows]
    failures = [{"sigma": fmt_real(o.sigma), "error": o.error} for o in outcomes if o.error]
    if args.format == "json":
        text = _json_text({
            "rows": [dict(zip(LOCUS_HEADER, r.as_row())) for r in rows],
            "failures": failures,
            "manifest": f"{args.out}.manifest.json" if args.out else None,
        })
    else:
        text = _csv_text(LOCUS_HEADER, [r.as_row() for r in rows])
    code = EXIT_OK
    if failures:
        code = EXIT_PRECISION if any("PrecisionExhausted" in f["error"] for f in failures) else EXIT_DOMAIN
        for f in failures:
            print(f"sigma={f['sigma']}: {f['error']}", file=sys.stderr)
    extra = {
        "per_p_seconds": {fmt_real(-o.sigma): round(o.seconds, 4) for o in outcomes},
        "failures": failures,
    }
    return text, code, extra


def _suite_params(args) -> dict:
    s = args.suite
    pick = {
        "inequalities": {"p_max": args.p_max, "n_max": args.n_max},
        "oracle": {"p_min": args.p_min, "p_max": args.p_max},
        "theorem1": {"ps": args.p_values},
        "theorem2": {"ps": args.p_values, "samples": args.samples},
        "theorem3": {"ps": args.p_values},
        "inkeri": {"m_min": args.m_min, "m_max": args.m_max, "jobs": args.jobs},
    }[s]
    params = {k: v for k, v in pick.items() if v is not None}
    if s != "inkeri":
        params["cfg"] = _config(args)
    return params


def cmd_verify(args) -> tuple:
    rep = run_suite(args.suite, **_suite_params(args))
    if args.format == "json":
        text = _json_text(rep.as_dict())
    elif args.format == "csv":
        text = _csv_text(
            ("suite", "case", "passed", "asserted", "detail"),
            [(rep.suite, c.name, c.passed, c.asserted, c.detail) for c in rep.cases],
        )
    else:
        lines = []
        for c in rep.cases:
            tag = ("PASS" if c.passed else "FAIL") if c.asserted else "INFO"
            lines.append(f"{tag}  {c.name}" + (f"  [{c.detail}]" if c.detail else ""))
        n_fail = len(rep.failures)
        n_asserted = sum(1 for c in rep.cases if c.asserted)
        lines.append(
            f"suite {rep.suite}: {n_asserted - n_fail}/{n_asserted} passed in {rep.seconds:.1f}s"
        )
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if rep.passed else EXIT_VERIFY, {}


COMMANDS = {
    "eval": cmd_eval,
    "bernoulli": cmd_bernoulli,
    "census": cmd_census,
    "locus": cmd_locus,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2 already
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        text, code, extra = COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (PrecisionExhausted, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        manifest = RunManifest(
            command=["hurwitz-zeros", *argv],
            config=_config_echo(args),
            data_file=args.out,
            wall_time_seconds=round(time.perf_counter() - start, 4),
            per_p_seconds=extra.get("per_p_seconds", {}),
            failures=extra.get("failures", []),
        )
        write_manifest(args.out, manifest)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
