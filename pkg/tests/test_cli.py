import json
import subprocess
import sys

import pytest

from ribbonlr.cli import run


def call(*argv):
    status, out = run(argv)
    return status, (json.loads(out) if out else None)


def coeffs(doc):
    return {c["partition"]: c["coeff"] for c in doc}


def test_llt_with_schur():
    status, doc = call("llt", "--shape", "2,2/", "--n", "2", "--vars", "2", "--schur")
    assert status == 0
    assert coeffs(doc["schur"]) == {"2": {"min_deg": 2, "coeffs": [1]}, "1,1": {"min_deg": 0, "coeffs": [1]}}


def test_llt_untileable_is_zero():
    status, doc = call("llt", "--shape", "2,1/", "--n", "2", "--vars", "2")
    assert status == 0 and doc["polynomial"] == []


def test_core_quotient():
    status, doc = call("core-quotient", "--partition", "2,2", "--n", "2")
    assert status == 0
    assert doc["core"] == "" and sorted(doc["quotient"]) == ["1", "1"]


def test_strip_series():
    status, doc = call("strip-series", "--path", "0", "--n", "2")
    assert status == 0
    assert doc["series"] == [{"ribbons": 0, "spin": 0, "count": 1}, {"ribbons": 1, "spin": 1, "count": 1}]


def test_qlr_verify():
    status, doc = call("qlr", "--mu", "2", "--nu", "1", "--verify")
    assert status == 0 and doc["verified"] is True
    assert set(coeffs(doc["coeffs"])) == {"2", "1,1"}


def test_verify_word_identity():
    status, doc = call("verify", "word-identity", "--max-cells", "8", "--n", "2")
    assert status == 0
    assert doc["failures"] == [] and doc["suite"] == "word-identity" and doc["cases_run"] > 0


@pytest.mark.parametrize("argv", [
    ("llt", "--shape", "2,x", "--n", "2", "--vars", "2"),
    ("qlr", "--mu", "2", "--rho", "3"),
    ("strip-series", "--path", "012", "--n", "2"),
    ("verify", "qlr", "--max-cells", "4", "--n", "3"),
    ("verify", "nonsense", "--max-cells", "4"),
    ("core-quotient", "--partition", "2", "--n", "0"),
    (),
])
def test_usage_errors(argv):
    assert run(argv) == (2, "")


def test_jobs_do_not_change_content():
    _, one = call("verify", "bad-guy", "--max-cells", "5", "--jobs", "1")
    _, two = call("verify", "bad-guy", "--max-cells", "5", "--jobs", "2")
    one.pop("elapsed_ms")
    two.pop("elapsed_ms")
    assert one == two


def test_violation_exit_status(monkeypatch):
    from ribbonlr import suites

    monkeypatch.setitem(suites.CHECKERS, "path-reversal", lambda case: [{"path": case[0]}])
    status, doc = call("verify", "path-reversal", "--max-cells", "1", "--n", "2")
    assert status == 1 and len(doc["failures"]) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ribbonlr", "core-quotient", "--partition", "1", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["core"] == "1"
