"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line, printed in the pytest terminal summary
under "acceptance criteria". Run alone with ``pytest tests/test_acceptance.py``.
"""

import csv
import io
import math
import random
import time
from fractions import Fraction

from powersums.cli import main
from powersums.combinatorics import binomial, harmonic, stirling1_unsigned
from powersums.identities import (
    FLOAT_SUITE,
    IdentityParams,
    rhs_eq6,
    rhs_eq8,
    rhs_eq17,
    rhs_eq19,
    verify_identity,
)
from powersums.stirling import (
    binomial_transform,
    binomial_transform_inverse,
    stirling_function,
    stirling_function_exact,
    upper_sum_binomial,
    upper_sum_harmonic,
    upper_sum_reciprocal,
    upper_sum_stirling1,
    weighted_binomial_sum_closed,
)
from powersums.sweep import SweepConfig, run_sweep

F = Fraction
EXACT_XS = (F(2), F(-2), F(1, 2), F(-1, 3), F(3))
STANDARD_TOL = 1e-7
EXTENDED_TOL = 1e-10


def _random_complex(rng, bound):
    return complex(rng.uniform(-bound, bound), rng.uniform(-bound, bound))


def _random_x(rng):
    while True:
        x = _random_complex(rng, 2.0)
        if abs(x) <= 2 and abs(1 + x) >= 0.25:
            return x


def test_c1_exact_identity_suite(criterion):
    rng = random.Random("c1")
    start = time.perf_counter()
    checked, failures = 0, []

    def check(ident, params):
        nonlocal checked
        rep = verify_identity(ident, params, "exact")
        checked += 1
        if not (rep.passed and rep.lhs == rep.rhs and rep.abs_err == 0 and rep.rel_err == 0):
            failures.append((ident, params))

    for alpha in range(1, 9):
        for m in range(1, 13):
            for ident in ("EQ8", "EQ10", "EQ20", "EQ23", "EQ24"):
                check(ident, IdentityParams(alpha=alpha, m=m))
            for x in EXACT_XS:
                for ident in ("EQ6", "EQ16", "EQ17", "EQ19"):
                    check(ident, IdentityParams(alpha=alpha, m=m, x=x))
            for _ in range(3):
                coeffs = tuple(rng.randint(-9, 9) for _ in range(m))
                check("LEMMA4", IdentityParams(alpha=alpha, m=m, coeffs=coeffs))
    # reciprocal powers: EQ6 at negative exponents and its EQ13 spelling
    for alpha in (-3, -2, -1):
        for m in range(1, 13):
            for x in EXACT_XS:
                check("EQ6", IdentityParams(alpha=alpha, m=m, x=x))
                check("EQ13", IdentityParams(alpha=-alpha, m=m, x=x))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    criterion(1, "exact identity suite", ok, f"{checked} checks, {len(failures)} failures, {elapsed:.2f}s")
    assert not failures, failures[:5]
    assert elapsed < 10.0


def test_c2_worked_values(criterion):
    cases = [
        ("EQ8", IdentityParams(alpha=2, m=2), 5),
        ("EQ6", IdentityParams(alpha=2, m=2, x=2), 18),
        ("EQ16", IdentityParams(alpha=1, m=2, x=2), 10),
        ("EQ17", IdentityParams(alpha=2, m=2, x=1), 6),
        ("EQ19", IdentityParams(alpha=2, m=2, x=1), 6),
        ("EQ20", IdentityParams(alpha=2, m=3), 23),
        ("EQ23", IdentityParams(alpha=2, m=2), 7),
        ("EQ24", IdentityParams(alpha=2, m=2), F(9, 2)),
        ("EQ6", IdentityParams(alpha=-1, m=2, x=1), F(3, 2)),
    ]
    bad = []
    for ident, params, expected in cases:
        rep = verify_identity(ident, params, "exact")
        if not (rep.passed and rep.lhs == rep.rhs == expected):
            bad.append((ident, params, rep.lhs, rep.rhs))
    if rhs_eq6(-1, 1, 2) != F(3, 2) or stirling_function_exact(-1, 2) != F(-3, 4):
        bad.append(("EQ13-style", "S(-1,2)"))
    criterion(2, "worked-value spot checks", not bad, f"{len(cases)} values")
    assert not bad


def test_c3_float_identity_suite(criterion):
    worst = {}
    failed = 0
    for mode, tol in (("standard", STANDARD_TOL), ("extended", EXTENDED_TOL)):
        reports = run_sweep(FLOAT_SUITE, SweepConfig(draws=500, m_max=12, alpha_bound=4.0,
                                                     x_bound=2.0, seed=20240, mode=mode))
        assert len(reports) == 500 * len(FLOAT_SUITE)
        worst[mode] = max(r.rel_err for r in reports)
        failed += sum(not r.passed for r in reports)
    ok = worst["standard"] <= STANDARD_TOL and worst["extended"] <= EXTENDED_TOL and failed == 0
    criterion(3, "float identity suite", ok,
              f"max rel_err standard {worst['standard']:.2e}, extended {worst['extended']:.2e}")
    assert ok


def test_c4_recurrence(criterion):
    rng = random.Random("c4")
    worst = 0.0
    for _ in range(200):
        alpha = _random_complex(rng, 4.0)
        for k in range(2, 13):
            lhs = stirling_function(alpha + 1, k, "extended")
            rhs = k * stirling_function(alpha, k, "extended") + stirling_function(alpha, k - 1, "extended")
            worst = max(worst, abs(lhs - rhs) / abs(lhs))
    ok = worst <= 1e-9
    criterion(4, "recurrence S(a+1,k) = k S(a,k) + S(a,k-1)", ok, f"max rel_err {worst:.2e}")
    assert ok


def test_c5_vanishing(criterion):
    exact_bad, float_bad = [], []
    for k in range(2, 16):
        for n in range(1, k):
            if stirling_function_exact(n, k) != 0:
                exact_bad.append((n, k))
            bound = 1e-8 * k ** n / math.factorial(k)
            if abs(stirling_function(n, k, "extended")) > bound:
                float_bad.append((n, k))
    ok = not exact_bad and not float_bad
    criterion(5, "vanishing S(n,k) = 0 for n < k", ok, f"exact bad {len(exact_bad)}, float bad {len(float_bad)}")
    assert ok


def test_c6_upper_summation_kernels(criterion):
    bad = 0
    for m in range(1, 31):
        for j in range(1, m + 1):
            ks = range(j, m + 1)
            bad += upper_sum_binomial(m, j) != sum(binomial(k, j) for k in ks)
            bad += upper_sum_stirling1(m, j) != sum(binomial(k, j) * stirling1_unsigned(m, k) for k in ks)
            bad += upper_sum_harmonic(m, j) != sum(binomial(k, j) * harmonic(k) for k in ks)
            bad += upper_sum_reciprocal(m, j) != sum(F(binomial(k, j), m - k + 1) for k in ks)
            for x in (F(2), F(-2), F(1, 2)):
                direct = sum(binomial(m, k) * binomial(k, j) * x ** k for k in ks)
                bad += weighted_binomial_sum_closed(x, m, j) != direct
    criterion(6, "upper-summation kernels exact", bad == 0, f"{bad} mismatches")
    assert bad == 0


def test_c7_transform_round_trip(criterion):
    rng = random.Random("c7")
    bad = 0
    for _ in range(100):
        seq = [rng.randint(-1000, 1000) for _ in range(rng.randint(1, 20))]
        bad += binomial_transform_inverse(binomial_transform(seq)) != seq
    criterion(7, "binomial transform round trip", bad == 0, f"{bad}/100 mismatches")
    assert bad == 0


def test_c8_equivalences(criterion):
    rng = random.Random("c8")
    worst = {"standard": 0.0, "extended": 0.0}
    for _ in range(500):
        alpha = _random_complex(rng, 4.0)
        m = rng.randint(1, 12)
        r = rng.randint(1, 8)
        x = _random_x(rng)
        for mode in worst:
            a, b = rhs_eq8(alpha, m, "EQ8", mode), rhs_eq8(alpha, m, "EQ10", mode)
            worst[mode] = max(worst[mode], abs(a - b) / abs(a))
            a, b = rhs_eq17(r, x, m, mode), rhs_eq19(r, x, m, mode)
            worst[mode] = max(worst[mode], abs(a - b) / abs(a))
    minus_one_bad = 0
    for m in range(1, 13):
        for alpha in range(-3, 9):
            expected = (-1) ** m * math.factorial(m) * stirling_function_exact(alpha, m)
            minus_one_bad += rhs_eq17(alpha, -1, m) != expected
        for _ in range(10):
            alpha = _random_complex(rng, 4.0)
            for mode, tol in (("standard", STANDARD_TOL), ("extended", EXTENDED_TOL)):
                expected = (-1) ** m * math.factorial(m) * stirling_function(alpha, m, mode)
                got = rhs_eq17(alpha, -1, m, mode)
                minus_one_bad += abs(got - expected) > tol * max(abs(expected), 1e-300)
    ok = worst["standard"] <= STANDARD_TOL and worst["extended"] <= EXTENDED_TOL and minus_one_bad == 0
    criterion(8, "EQ8=EQ10, EQ17=EQ19, EQ17 at x=-1", ok,
              f"max rel_err standard {worst['standard']:.2e}, extended {worst['extended']:.2e}, "
              f"x=-1 mismatches {minus_one_bad}")
    assert ok


def test_c9_cli_golden(criterion, capsys):
    def run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    results = {}
    results["eval stirling-function"] = run("eval", "stirling-function", "--alpha", "0+1i", "--k", "2")[:2] == (
        0, "-0.615381+0.319481i\n")
    results["eval harmonic json"] = run("eval", "harmonic", "--k", "3", "--format", "json")[:2] == (
        0, '{"value":"11/6"}\n')
    results["eval eulerian"] = run("eval", "eulerian", "--n", "3")[:2] == (0, "0,1,4,1\n")

    code, out, _ = run("verify", "EQ8", "--alpha", "2", "--m", "2", "--mode", "exact")
    results["verify EQ8"] = code == 0 and out.startswith("EQ8 pass lhs=5 rhs=5 ")
    code, out, err = run("verify", "EQ16", "--n", "1", "--x", "1", "--m", "3")
    results["verify EQ16 singular"] = code == 3 and "singular point x=1" in err
    code, out, _ = run("verify", "all", "--alpha", "2", "--x", "2", "--m", "4", "--mode", "exact")
    rows = out.splitlines()[:-1]
    results["verify all"] = code == 0 and len(rows) == 10 and all(" pass " in r for r in rows)

    sweep = ("sweep", "EQ17", "--draws", "100", "--m-max", "10", "--seed", "42")
    first, second = run(*sweep), run(*sweep)
    results["sweep determinism"] = first == second and first[0] == 0
    first, second = run(*sweep, "--format", "csv"), run(*sweep, "--format", "csv")
    results["sweep csv determinism"] = first == second and first[1].startswith(
        "identity,alpha_re,alpha_im,x_re,x_im,m,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n")
    code, out, _ = run("sweep", "all", "--draws", "500", "--m-max", "12", "--format", "csv")
    rel = [float(r["rel_err"]) for r in csv.DictReader(io.StringIO(out))]
    results["sweep all bound"] = code == 0 and len(rel) == 4000 and max(rel) <= STANDARD_TOL
    code, out, _ = run("sweep", "EQ6", "--draws", "10", "--alpha-bound", "0", "--x", "1", "--m-max", "5",
                       "--format", "csv")
    results["sweep pinned"] = code == 0 and all(
        r["pass"] == "true" and float(r["rel_err"]) <= 1e-12 for r in csv.DictReader(io.StringIO(out)))

    results["transform forward"] = run("transform", "--seq", "1,1,1", "--dir", "forward")[:2] == (0, "1,-1,1\n")
    results["transform inverse"] = run("transform", "--seq", "1,-1,1", "--dir", "inverse")[:2] == (0, "1,1,1\n")
    results["transform single"] = run("transform", "--seq", "5", "--dir", "forward")[:2] == (0, "5\n")
    results["transform malformed"] = run("transform", "--seq", "1,,2")[0] == 2
    results["usage exit code"] = run("verify", "EQ8", "--m", "2", "--unknown", "3")[0] == 2

    failed = [name for name, ok in results.items() if not ok]
    criterion(9, "CLI golden outputs and exit codes", not failed,
              f"{len(results) - len(failed)}/{len(results)} ok" + (f"; failed: {failed}" if failed else ""))
    assert not failed
