from __future__ import annotations

import pytest

from gl3cg.verify import (SUITES, CheckResult, render_report,
                          run_verification, suite_items)


def test_suite_names():
    assert SUITES == ("micro", "oracle-equality", "annihilation",
                      "gkz-residual", "invariance", "contravariance",
                      "triangularity", "multiplicity", "selection", "lattices")


def test_check_result_line():
    ok = CheckResult("micro", "case", True, "")
    assert ok.line() == "[micro] PASS case"
    bad = CheckResult("micro", "case", False, "got 1 want 2")
    assert bad.line() == "[micro] FAIL case (got 1 want 2)"


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_verification(suites=["no-such-suite"], max_weight=1)
    with pytest.raises(ValueError):
        suite_items("no-such-suite", 1)


def test_micro_suite_passes():
    results = run_verification(suites=["micro"], max_weight=1)
    assert results and all(r.ok for r in results)


def test_lattice_suite_passes():
    results = run_verification(suites=["lattices"], max_weight=1)
    assert results and all(r.ok for r in results)


def test_parallel_results_match_serial():
    serial = run_verification(suites=["micro", "lattices"], max_weight=1, jobs=1)
    parallel = run_verification(suites=["micro", "lattices"], max_weight=1, jobs=2)
    assert [r.line() for r in serial] == [r.line() for r in parallel]


def test_render_report_shape():
    results = run_verification(suites=["micro"], max_weight=1)
    report = render_report(results, 1, ["micro"])
    lines = report.splitlines()
    assert lines[0] == "verification report"
    assert lines[1] == "suites: micro"
    assert lines[2] == "max-weight: 1"
    assert lines[-1] == f"summary: {len(results)} checks, 0 failed"
    assert report.endswith("\n")
