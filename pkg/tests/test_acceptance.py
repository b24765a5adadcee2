"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
are produced (they are also shown in captured output on failure).
"""

from fractions import Fraction

import pytest

from zmeasure.kernels import hyper_kernel
from zmeasure.measures import GrandParams, ZParams, z_measure_n, plancherel_measure
from zmeasure.partitions import Configuration, YoungDiagram, enumerate_partitions
from zmeasure.sampling import empirical_correlation, sample_batch
from zmeasure.verification import (
    COMPLEX_PAIR,
    DEFAULT_REAL_PAIR,
    PARAMETER_SETS,
    fredholm_check,
    identity_suite,
    meixner_check,
    operator_identity_check,
    oracle_check,
    scaling_limit_check,
)


def _verdict(criterion: str, ok: bool, detail: str = "") -> None:
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}" + (f"  [{detail}]" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def test_criterion_01_normalization():
    worst = 0.0
    for _name, zp in PARAMETER_SETS:
        for n in range(1, 19):
            total = sum(z_measure_n(lam, zp) for lam in enumerate_partitions(n))
            worst = max(worst, abs(total - 1.0))
    _verdict(
        "1 normalization over 1..18 boxes, three parameter sets (abs 1e-11)",
        worst <= 1e-11,
        f"worst deviation {worst:.3e}",
    )


def test_criterion_02_spot_values():
    zp = DEFAULT_REAL_PAIR
    e1 = abs(z_measure_n(YoungDiagram((2,)), zp) - 6.0 / 7.0)
    e2 = abs(z_measure_n(YoungDiagram((1, 1)), zp) - 1.0 / 7.0)
    _verdict(
        "2 closed-form spot values 6/7 and 1/7 (abs 1e-14)",
        max(e1, e2) <= 1e-14,
        f"errors {e1:.3e}, {e2:.3e}",
    )


def test_criterion_03_fredholm_identity():
    rep_real = fredholm_check(GrandParams(DEFAULT_REAL_PAIR, 0.3), trunc=60, tol=1e-10)
    rep_cplx = fredholm_check(GrandParams(COMPLEX_PAIR, 0.5), trunc=60, tol=1e-10)
    worst = max(c.abs_err for c in rep_real.cases + rep_cplx.cases)
    _verdict(
        "3 determinant identity det(1+L)(1-xi)^t = 1 (abs 1e-10, two regimes)",
        rep_real.passed and rep_cplx.passed,
        f"worst residual {worst:.3e}",
    )


def test_criterion_04_kernel_oracle_equivalence():
    worst = 0.0
    for zp in (DEFAULT_REAL_PAIR, COMPLEX_PAIR):
        report = oracle_check(zp, xi=0.2, n_max=26, tail_tol=1e-15, max_size=3, rel_tol=1e-6)
        worst = max(worst, max(c.rel_err for c in report.cases))
        if not report.passed:
            _verdict("4 kernel minors vs brute-force sums (rel 1e-6)", False, str(report.failures()[0]))
    _verdict(
        "4 kernel minors vs brute-force sums over 93 configurations (rel 1e-6)",
        worst <= 1e-6,
        f"worst rel err {worst:.3e}",
    )


def test_criterion_05_operator_identity():
    report = operator_identity_check(GrandParams(DEFAULT_REAL_PAIR, 0.3), trunc=80, tol=1e-8)
    resolvent = next(c for c in report.cases if "resolvent" in c.label)
    block_worst = max(c.lhs for c in report.cases if c.label.startswith("block product"))
    _verdict(
        "5 entrywise kernel equals L(1+L)^(-1) and block products (max 1e-8, trunc 80)",
        report.passed,
        f"resolvent gap {resolvent.lhs:.3e}, worst block gap {block_worst:.3e}",
    )


def test_criterion_06_appendix_identities():
    ok = True
    worst = 0.0
    for zp in (DEFAULT_REAL_PAIR, COMPLEX_PAIR):
        report = identity_suite(GrandParams(zp, 0.2))
        core = [
            c
            for c in report.cases
            if "decomposition" in c.label or "equals one" in c.label
        ]
        ok = ok and all(c.passed for c in core) and report.passed
        worst = max(worst, max(c.rel_err if "decomposition" in c.label else c.abs_err for c in core))
    _verdict(
        "6 unity identity and both decompositions on 5-point grid (1e-12, two regimes)",
        ok,
        f"worst deviation {worst:.3e}",
    )


def test_criterion_07_meixner_degeneration():
    report = meixner_check(big_n=3, alpha=0.5, xi=0.4, grid=10, proj_size=100)
    degen = next(c for c in report.cases if "degenerates" in c.label)
    trace = next(c for c in report.cases if "trace" in c.label)
    idem = next(c for c in report.cases if "idempotence" in c.label)
    _verdict(
        "7 '++' block degenerates to the rank-3 Meixner kernel (rel 1e-10) "
        "with projection checks (1e-8)",
        report.passed,
        f"degeneration {degen.lhs:.3e}, trace gap {trace.abs_err:.3e}, idempotence {idem.lhs:.3e}",
    )


@pytest.fixture(scope="module")
def scaling_report():
    return scaling_limit_check(DEFAULT_REAL_PAIR, u=1.0, v=2.0, xi_list=(0.9, 0.99, 0.999))


def test_criterion_08_scaling_limit(scaling_report):
    block_cases = [c for c in scaling_report.cases if c.label.startswith(("++", "+-", "-+", "--"))]
    ok = all(c.passed for c in block_cases)
    finals = [c for c in block_cases if "error at xi=0.999" in c.label]
    worst = max(c.lhs for c in finals)
    _verdict(
        "8 scaled kernel converges to the Whittaker kernel, all four blocks "
        "(strictly decreasing; final <= 5e-2)",
        ok,
        f"worst final error {worst:.3e}",
    )


def test_criterion_09_hypergeometric_limit(scaling_report):
    cases = [c for c in scaling_report.cases if c.label.startswith("hypergeometric limit")]
    assert len(cases) == 3
    worst = max(c.rel_err for c in cases)
    _verdict(
        "9 2F1 at large lower parameter matches the Whittaker form, x in {0.5, 1.5, 5} (rel 1e-2)",
        all(c.passed for c in cases),
        f"worst rel err {worst:.3e}",
    )


def test_criterion_10_monte_carlo():
    gp = GrandParams(DEFAULT_REAL_PAIR, 0.5)
    batch = sample_batch(gp, 100_000, seed=20260810)
    rerun = sample_batch(gp, 100_000, seed=20260810)
    deterministic = batch.draws == rerun.draws
    worst_sigma = 0.0
    for s, k in ((1, 0), (-1, 0), (1, 1), (-1, 1)):
        x = s * Fraction(2 * k + 1, 2)
        est, se = empirical_correlation(batch, Configuration.from_points([x]))
        ref = hyper_kernel(x, x, gp)
        worst_sigma = max(worst_sigma, abs(est - ref) / se)
    _verdict(
        "10 empirical one-point function within 3 standard errors at 1e5 draws; "
        "rerun bit-identical",
        deterministic and worst_sigma <= 3.0,
        f"worst deviation {worst_sigma:.2f} sigma, deterministic={deterministic}",
    )


def test_criterion_11_plancherel_limit():
    gaps = []
    for z in (100.5, 1000.5):
        zp = ZParams(z, z)
        gaps.append(
            max(
                abs(z_measure_n(lam, zp) - plancherel_measure(lam))
                for lam in enumerate_partitions(6)
            )
        )
    _verdict(
        "11 six-box measures approach the squared-dimension weights "
        "(gap <= 0.05 at z=100.5, smaller at z=1000.5)",
        gaps[0] <= 0.05 and gaps[1] < gaps[0],
        f"gaps {gaps[0]:.3e} -> {gaps[1]:.3e}",
    )
