"""Acceptance gate: every criterion at its stated size and tolerance.

The nine verification suites run once (full acceptance sizes, fixed seed)
in a session fixture; each criterion asserts on its report and prints one
pass/fail line.  Run with `pytest -rA tests/test_acceptance.py` to see the
per-criterion lines, or `schreier-lab verify all` for the CLI view.
"""

import os
import time

import pytest

from schreierlab import suites

SEED = 20240817
JOBS = min(4, os.cpu_count() or 1)

_TIMINGS: dict[str, float] = {}


@pytest.fixture(scope="module")
def full_reports():
    reports = {}
    for name in suites.SUITE_NAMES:
        report = suites.run_suite(name, seed=SEED, jobs=JOBS)
        reports[name] = report
        _TIMINGS[name] = report.elapsed
    return reports


def _declare(criterion: str, report, extra: str = "") -> None:
    status = "PASS" if report.passed else "FAIL"
    line = f"ACCEPTANCE {criterion}: {status}"
    if extra:
        line += f" ({extra})"
    print(line)
    if not report.passed:
        bad = [r for r in report.records if not r["pass"]][:3]
        pytest.fail(f"{criterion} failed: {bad}")


def test_criterion_01_norm_oracle_equivalence(full_reports):
    report = full_reports["norm-oracle"]
    # exhaustive sign vectors on 1..7 plus 500 random rational vectors per
    # space/exponent, exact in rational mode and 1e-9 relative in float mode
    checks = {r["check"] for r in report.records}
    assert "sign-vectors-exhaustive" in checks
    for combo in ("sp-p1", "sp-p2", "sp-p3", "bp-p2", "bp-p3"):
        assert f"random-rational-{combo}" in checks
    _declare("1 norm-oracle", report, f"{report.elapsed:.1f}s < 30s")
    assert report.elapsed < 30.0


def test_criterion_02_tau_greedy_correctness(full_reports):
    report = full_reports["tau-oracle"]
    _declare("2 tau-oracle", report, f"{report.elapsed:.1f}s < 20s")
    assert report.elapsed < 20.0


def test_criterion_03_flat_vector_bounds(full_reports):
    report = full_reports["lemma22"]
    # 20 lengths x 5 starts x (3 exact + 1 float) Schreier records plus
    # (2 exact + 1 float) chain-norm records
    assert len(report.records) == 20 * 5 * 7
    _declare("3 lemma22", report)


def test_criterion_04_three_norm_upper_bound(full_reports):
    report = full_reports["jameson"]
    constant = next(r for r in report.records if r["check"] == "constant-p2")
    assert constant["observed"] == "4/1"
    uppers = [r for r in report.records if r["check"].startswith("upper-random-")]
    assert len(uppers) == 3
    _declare("4 jameson-upper", report)


def test_criterion_05_three_norm_lower_family(full_reports):
    report = full_reports["jameson"]
    extremal = [r for r in report.records if r["check"].startswith("extremal-k")]
    assert len(extremal) == 10
    monotone = next(r for r in report.records if r["check"] == "extremal-monotone")
    assert monotone["pass"]
    _declare("5 jameson-extremal", report)


def test_criterion_06_block_sum_contraction(full_reports):
    report = full_reports["sigma"]
    _declare("6 sigma", report)


def test_criterion_07_index_domination(full_reports):
    report = full_reports["domination"]
    _declare("7 domination", report)


def test_criterion_08_doubling_index_bounds(full_reports):
    report = full_reports["gl-bounds"]
    _declare("8 gl-bounds", report)


def test_criterion_09_partition_and_divergence(full_reports):
    mpb = full_reports["mpb"]
    cor = full_reports["corollary64"]
    assert len(mpb.records) == 26  # 25 levels + contiguity
    assert len(cor.records) == 20
    _declare("9a mpb", mpb)
    _declare("9b corollary64", cor)


def test_criterion_10_runtime_and_reproducibility(full_reports):
    total = sum(_TIMINGS[name] for name in suites.SUITE_NAMES)
    print(f"ACCEPTANCE 10: full suite elapsed {total:.1f}s (< 120s)")
    assert total < 120.0

    small = {
        "norm-oracle": {"randoms_per_p": 30, "sign_indices": 5},
        "tau-oracle": {"random_count": 300},
        "lemma22": {"max_m": 4},
        "jameson": {"upper_count": 200, "max_k": 4},
        "domination": {"pairs": 4, "coeffs_per_combo": 10},
        "sigma": {"count": 80},
        "mpb": {"n_max": 8},
        "corollary64": {"pairs": 4},
        "gl-bounds": {"count": 10},
    }
    for name in suites.SUITE_NAMES:
        a = suites.run_suite(name, seed=11, sizes=small[name], jobs=1)
        b = suites.run_suite(name, seed=11, sizes=small[name], jobs=2)
        assert a.to_json_bytes() == b.to_json_bytes(), name
        assert a.to_csv_text() == b.to_csv_text(), name
    # two cheap suites byte-compared at full size as well
    for name in ("mpb", "sigma"):
        a = suites.run_suite(name, seed=SEED, jobs=1)
        assert a.to_json_bytes() == full_reports[name].to_json_bytes()
    print("ACCEPTANCE 10: reports byte-reproducible across reruns and job counts")
