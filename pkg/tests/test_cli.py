import json

import pytest

from contact_tri.cli import run
from contact_tri.io import read_facet_list


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def facet_lines(text):
    return [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def test_generate_writes_facets(capsys):
    code, out, err = call(capsys, "generate", "s21_10")
    assert code == 0
    assert len(out.splitlines()) == 30 == len(facet_lines(out))
    assert "contact-tri" in err


def test_generate_is_deterministic(capsys):
    first = call(capsys, "generate", "sigma8")[1]
    second = call(capsys, "generate", "sigma8")[1]
    assert first == second


def test_generate_to_file_round_trips(capsys, tmp_path):
    path = tmp_path / "s.txt"
    assert call(capsys, "generate", "torus7", "-o", str(path))[0] == 0
    X = read_facet_list(path)
    assert X.f_vector() == (7, 21, 14)
    code, out, _ = call(capsys, "fvector", str(path), "--json")
    assert code == 0 and json.loads(out)["f_vector"] == [7, 21, 14]


def test_quiet_and_json_suppress_banner(capsys):
    code, out, err = call(capsys, "homology", "s21_10", "--quiet")
    assert code == 0 and err == "" and "(Z, Z, Z, Z)" in out
    code, out, err = call(capsys, "homology", "s21_10", "--json")
    assert err == "" and [h["betti"] for h in json.loads(out)["homology"].values()] == [1, 1, 1, 1]


def test_usage_errors_exit_two(capsys):
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "generate", "nope", "-q")[0] == 2
    assert call(capsys, "fvector", "/nonexistent/file.txt", "-q")[0] == 2
    assert call(capsys, "schain", "--n", "2", "--sign", "x", "-q")[0] == 2


def test_aut_and_schain(capsys):
    code, out, _ = call(capsys, "aut", "s3_5", "--json")
    assert code == 0 and json.loads(out)["order"] == 120
    code, out, _ = call(capsys, "schain", "--n", "3", "--sign", "+")
    assert code == 0 and "d3 = 3" in out


def test_consum(capsys):
    code, out, _ = call(capsys, "consum", "sigma8", "s3_5", "--json")
    assert code == 0 and json.loads(out)["f_vector"][0] == 9


def test_quotient_wrap(capsys, tmp_path):
    path = tmp_path / "a.txt"
    path.write_text("a b c\nb c d\n")
    code, out, _ = call(capsys, "quotient", str(path), "--identify", "a=d", "-q")
    assert code == 2
    code, out, _ = call(capsys, "quotient", str(path), "--identify", "a=b", "-q")
    assert code == 2


def test_t3_exit_reflects_disk_checks(capsys):
    # the 40-vertex torus has facet diameter sqrt(2)/3, just above 0.45
    assert call(capsys, "t3", "--n", "1", "--r0", "0.48", "-q")[0] == 0
    assert call(capsys, "t3", "--n", "1", "--r0", "0.45", "-q")[0] == 1
    code, out, _ = call(capsys, "t3", "--n", "2", "--r0", "0.45", "--json")
    assert code == 1
    data = json.loads(out)
    assert [d["status"] for d in data["disks"]] == ["PASS", "FAIL"]
    assert [d["upper_status"] for d in data["disks"]] == ["PASS", "PASS"]


def test_ledger_commands(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = call(capsys, "ledger", "new", "--manifold", "s3", "--f0", "4", "-q")
    assert code == 0
    path.write_text(out)
    code, out, _ = call(capsys, "ledger", "twist", "--from", str(path), "--sl", "1", "--df0", "3", "-q")
    assert code == 0
    data = json.loads(out)
    assert data["d3"] == 1 and data["f0_bound"] == 7
    # S^3 has no first homology, so a class vector is a basis mismatch
    assert call(capsys, "ledger", "twist", "--from", str(path), "--class", "0", "--sl", "1", "-q")[0] == 2
    code, out, _ = call(capsys, "ledger", "bound", "--n", "-2", "-q")
    assert code == 0 and "10" in out


def test_verify_targets(capsys):
    code, out, _ = call(capsys, "verify", "s3_5", "--json")
    assert code == 0
    (report,) = json.loads(out)
    assert report["target"] == "s3_5"
    checks = report["checks"]
    assert checks and all(c["status"] == "PASS" for c in checks)
    assert call(capsys, "verify", "nope", "-q")[0] == 2


def test_export_off(capsys):
    code, out, _ = call(capsys, "export", "sigma8", "--format", "off", "-q")
    assert code == 0 and out.startswith("4OFF")
    assert call(capsys, "export", "s21_10", "--format", "off", "-q")[0] == 2


def test_delta(capsys):
    code, out, _ = call(capsys, "delta", "--samples", "200", "--json")
    assert code == 0 and json.loads(out)["delta_hat"] < 0.99
