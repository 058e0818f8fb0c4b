import json

import pytest

from contact_tri.errors import BadIndex
from contact_tri.verify import SUITES, Check, VerificationReport, run_all, run_suite


def test_exit_status_follows_fail_only():
    ok = VerificationReport("x", [Check("a", "PASS", 1, 1, None, "p"), Check("b", "UNKNOWN", 1, 2, None, "p")])
    bad = VerificationReport("x", [Check("a", "FAIL", 1, 2, None, "p")])
    assert ok.exit_status == 0 and bad.exit_status == 1
    assert "UNKNOWN" in ok.table()


@pytest.mark.parametrize("target", ["s3_5", "sigma8", "torus7", "solid_tori", "s_ij", "s21_10", "cube77"])
def test_suites_pass(target):
    rep = run_suite(target)
    assert rep.exit_status == 0
    assert all(c.provenance for c in rep.checks)
    json.dumps(rep.to_json())


def test_sigma8_reports_partial_legendrian_edges_as_unknown():
    rep = run_suite("sigma8")
    unknown = [c for c in rep.checks if c.status == "UNKNOWN"]
    assert len(unknown) == 1 and "16/24" in str(unknown[0].measured)


def test_unknown_target():
    with pytest.raises(BadIndex):
        run_suite("nope")


def test_run_all_is_sorted_and_green():
    reports = run_all()
    targets = [r.target for r in reports]
    assert set(SUITES) <= {t.split("(")[0] for t in targets}
    assert all(r.exit_status == 0 for r in reports)
