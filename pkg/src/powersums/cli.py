"""Command-line front end.

    powersums eval stirling-function --alpha 0+1i --k 2
    powersums verify EQ8 --alpha 2 --m 2 --mode exact
    powersums sweep all --draws 500 --m-max 12 --seed 1 --format csv
    powersums transform --seq 1,1,1 --dir forward

Exit codes: 0 success / all checks passed, 1 some check failed, 2 usage
error, 3 singular point or non-finite numeric result.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .arithmetic import is_rational
from .combinatorics import eulerian_polynomial, harmonic, stirling1_unsigned, stirling2_exact
from .errors import InvalidParams, NonFiniteResult, SingularPoint
from .formatting import format_float, format_scalar, json_scalar, parse_scalar, parse_sequence, split_complex
from .identities import (
    EXACT_SUITE,
    FLOAT_SUITE,
    INTEGER_EXPONENT,
    USES_X,
    IdentityId,
    IdentityParams,
    IdentityReport,
    verify_identity,
)
from .stirling import binomial_transform, binomial_transform_inverse, sigma_polynomial, stirling_function
from .sweep import SweepConfig, iter_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

CSV_HEADER = (
    "identity", "alpha_re", "alpha_im", "x_re", "x_im", "m",
    "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "pass",
)
EVAL_TARGETS = ("stirling-function", "stirling1", "stirling2", "eulerian", "harmonic", "sigma")


class UsageError(Exception):
    pass


@dataclass
class ReportDocument:
    rows: List[Any] = field(default_factory=list)

    @property
    def summary(self) -> Dict[str, Any]:
        reports = [r for r in self.rows if isinstance(r, IdentityReport)]
        passed = sum(r.passed for r in reports)
        return {
            "total": len(reports),
            "passed": passed,
            "failed": len(reports) - passed,
            "max_rel_err": max((r.rel_err for r in reports), default=0.0),
        }

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.rows if isinstance(r, IdentityReport))


# -- argument parsing --------------------------------------------------------

def _scalar_arg(text: str) -> Any:
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sequence_arg(text: str) -> List[Any]:
    try:
        return parse_sequence(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text!r}")
    return value


def _seed(text: str) -> int:
    value = _nonneg_int(text)
    if value >= 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _identity_target(text: str) -> str:
    t = text.upper()
    if t == "ALL":
        return "all"
    try:
        return IdentityId(t).value
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown identity {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--mode", choices=("exact", "standard", "extended"), default=None)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--seed", type=_seed, default=None)
    common.add_argument("--precision", type=_positive_int, default=6,
                        help="significant digits in text output")

    parser = argparse.ArgumentParser(prog="powersums", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a single quantity")
    p.add_argument("target", choices=EVAL_TARGETS)
    p.add_argument("--alpha", type=_scalar_arg)
    p.add_argument("--x", type=_scalar_arg)
    p.add_argument("--n", type=_nonneg_int)
    p.add_argument("--m", type=_positive_int)
    p.add_argument("--k", type=_positive_int)
    p.add_argument("--j", type=_positive_int)

    p = sub.add_parser("verify", parents=[common], help="check identities at one parameter point")
    p.add_argument("target", type=_identity_target, help="identity id (EQ6, ..., LEMMA4) or 'all'")
    exponent = p.add_mutually_exclusive_group()
    exponent.add_argument("--alpha", type=_scalar_arg)
    exponent.add_argument("--n", type=_scalar_arg, dest="alpha_n", help="integer exponent (EQ16)")
    exponent.add_argument("--r", type=_scalar_arg, dest="alpha_r", help="integer exponent (EQ19)")
    p.add_argument("--x", type=_scalar_arg)
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--coeffs", type=_sequence_arg, help="LEMMA4 coefficients c_1,c_2,...")

    p = sub.add_parser("sweep", parents=[common], help="seeded random identity checks")
    p.add_argument("target", type=_identity_target)
    p.add_argument("--draws", type=_positive_int, default=100)
    p.add_argument("--m-max", type=_positive_int, default=12)
    p.add_argument("--alpha-bound", type=float, default=4.0)
    p.add_argument("--x-bound", type=float, default=2.0)
    p.add_argument("--alpha", type=_scalar_arg, help="pin alpha instead of drawing it")
    p.add_argument("--x", type=_scalar_arg, help="pin x instead of drawing it")

    p = sub.add_parser("transform", parents=[common], help="binomial transform of a sequence")
    p.add_argument("--seq", type=_sequence_arg, required=True)
    p.add_argument("--dir", choices=("forward", "inverse"), default="forward")
    return parser


# -- commands ----------------------------------------------------------------

def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.target} needs {', '.join(missing)}")


def cmd_eval(args: argparse.Namespace) -> Any:
    t = args.target
    if t == "stirling-function":
        _require(args, "alpha", "k")
        return stirling_function(args.alpha, args.k, mode=args.mode or "standard")
    if t == "stirling2":
        _require(args, "n", "k")
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        return stirling2_exact(args.n, args.k)
    if t == "stirling1":
        if args.m is None and args.n is not None and args.n >= 1:
            args.m = args.n
        _require(args, "m", "k")
        return stirling1_unsigned(args.m, args.k)
    if t == "eulerian":
        _require(args, "n")
        return list(eulerian_polynomial(args.n).coefficients)
    if t == "harmonic":
        _require(args, "k")
        return harmonic(args.k)
    _require(args, "x", "m", "j")
    return sigma_polynomial(args.x, args.m, args.j, mode=args.mode)


def _lemma_coeffs(seed: Optional[int], m: int) -> List[int]:
    rng = random.Random(f"{seed or 0}:LEMMA4")
    return [rng.randint(-5, 5) for _ in range(m)]


def _verify_mode(args: argparse.Namespace, alpha: Any, coeffs: Optional[Sequence[Any]]) -> str:
    if args.mode is not None:
        return args.mode
    values = [alpha, args.x, *(coeffs or ())]
    return "exact" if all(v is None or is_rational(v) for v in values) else "standard"


def _is_positive_integer(value: Any) -> bool:
    return is_rational(value) and Fraction(value).denominator == 1 and value >= 1


def cmd_verify(args: argparse.Namespace) -> ReportDocument:
    alpha = next((a for a in (args.alpha, args.alpha_n, args.alpha_r) if a is not None), None)
    if alpha is None:
        raise UsageError("verify needs an exponent (--alpha, --n or --r)")
    run_all = args.target == "all"
    targets = list(EXACT_SUITE) if run_all else [IdentityId(args.target)]
    coeffs = args.coeffs
    if coeffs is None and IdentityId.LEMMA4 in targets:
        coeffs = _lemma_coeffs(args.seed, args.m)
    mode = _verify_mode(args, alpha, coeffs)

    doc = ReportDocument()
    for ident in targets:
        uses_x = ident in USES_X
        if run_all and ((uses_x and args.x is None)
                        or (ident in INTEGER_EXPONENT and not _is_positive_integer(alpha))):
            continue
        if uses_x and args.x is None:
            raise UsageError(f"{ident} needs --x")
        params = IdentityParams(
            alpha=alpha,
            m=args.m,
            x=args.x if uses_x else None,
            coeffs=tuple(coeffs) if ident is IdentityId.LEMMA4 else None,
        )
        try:
            doc.rows.append(verify_identity(ident, params, mode=mode, tol=args.tol))
        except SingularPoint as exc:
            if not run_all:
                raise
            print(f"skipped {ident}: {exc}", file=sys.stderr)
    return doc


def cmd_sweep(args: argparse.Namespace) -> ReportDocument:
    targets = FLOAT_SUITE if args.target == "all" else (IdentityId(args.target),)
    mode = args.mode or "standard"
    if mode == "exact":
        raise UsageError("sweep draws complex parameters; use --mode standard or extended")
    cfg = SweepConfig(
        draws=args.draws,
        m_max=args.m_max,
        alpha_bound=args.alpha_bound,
        x_bound=args.x_bound,
        alpha=args.alpha,
        x=args.x,
        seed=0 if args.seed is None else args.seed,
        mode=mode,
        tol=args.tol,
    )
    return ReportDocument(list(iter_sweep(targets, cfg)))


def cmd_transform(args: argparse.Namespace) -> List[Any]:
    seq = args.seq
    mode = args.mode
    if mode is None:
        mode = "exact" if all(is_rational(v) for v in seq) else "standard"
    fn = binomial_transform if args.dir == "forward" else binomial_transform_inverse
    out = fn(seq, mode=mode)
    if mode == "exact":
        return out
    if any(isinstance(v, complex) for v in seq):
        return [complex(v) for v in out]
    return [complex(v).real for v in out]


# -- rendering ---------------------------------------------------------------

def _csv_row(r: IdentityReport) -> List[str]:
    alpha_re, alpha_im = split_complex(r.params.alpha)
    x_re, x_im = ("", "") if r.params.x is None else split_complex(r.params.x)
    lhs_re, lhs_im = split_complex(r.lhs)
    rhs_re, rhs_im = split_complex(r.rhs)
    return [
        str(r.id), alpha_re, alpha_im, x_re, x_im, str(r.params.m),
        lhs_re, lhs_im, rhs_re, rhs_im, repr(r.abs_err), repr(r.rel_err),
        "true" if r.passed else "false",
    ]


def _json_row(r: IdentityReport) -> Dict[str, Any]:
    d = r.to_dict()
    d["params"] = {k: json_scalar(v) for k, v in d["params"].items()}
    for key in ("lhs", "rhs", "abs_err", "rel_err"):
        d[key] = json_scalar(d[key])
    return d


def _text_row(r: IdentityReport, p: int) -> str:
    return (
        f"{r.id} {'pass' if r.passed else 'FAIL'} "
        f"lhs={format_scalar(r.lhs, p)} rhs={format_scalar(r.rhs, p)} "
        f"abs_err={format_float(r.abs_err, p)} rel_err={format_float(r.rel_err, p)} mode={r.mode}"
    )


def render_reports(doc: ReportDocument, fmt: str, precision: int) -> str:
    if fmt == "json":
        summary = dict(doc.summary, max_rel_err=json_scalar(doc.summary["max_rel_err"]))
        payload = {"rows": [_json_row(r) for r in doc.rows], "summary": summary}
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(_csv_row(r) for r in doc.rows)
        return buf.getvalue()
    s = doc.summary
    lines = [_text_row(r, precision) for r in doc.rows]
    lines.append(
        f"summary: {s['passed']}/{s['total']} passed, "
        f"max rel_err={format_float(s['max_rel_err'], precision)}"
    )
    return "\n".join(lines) + "\n"


def render_value(value: Any, fmt: str, precision: int) -> str:
    if fmt == "json":
        return json.dumps({"value": json_scalar(value)}, separators=(",", ":")) + "\n"
    items = value if isinstance(value, list) else [value]
    texts = [format_scalar(v, precision) for v in items]
    if fmt == "csv":
        return "value\n" + "".join(t + "\n" for t in texts)
    return ",".join(texts) + "\n"


# -- entry point -------------------------------------------------------------

def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = sys.stdout
    try:
        if args.command == "eval":
            out.write(render_value(cmd_eval(args), args.format, args.precision))
            return EXIT_OK
        if args.command == "transform":
            out.write(render_value(cmd_transform(args), args.format, args.precision))
            return EXIT_OK
        doc = cmd_verify(args) if args.command == "verify" else cmd_sweep(args)
        out.write(render_reports(doc, args.format, args.precision))
        return EXIT_OK if doc.all_passed else EXIT_FAIL
    except (SingularPoint, NonFiniteResult) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, InvalidParams) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
