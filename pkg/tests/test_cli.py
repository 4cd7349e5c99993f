import csv
import dataclasses
import json
import subprocess
import sys

import pytest

from mcs_dkp.cli import main
from mcs_dkp.report import CheckReport

FIELDS = [f.name for f in dataclasses.fields(CheckReport)]


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_algebra_suite_json(capsys):
    code, out = run(capsys, "verify", "--suite", "algebra", "--format", "json")
    recs = records(out.out)
    assert code == 0
    assert len(recs) == 27 + 9 + 3
    assert all(r["status"] == "pass" and r["residual"] == 0 for r in recs)
    assert all(list(r) == FIELDS and isinstance(r["paper_ref"], str) and r["paper_ref"] for r in recs)


def test_errata_suite_notes_do_not_fail(capsys):
    code, out = run(capsys, "verify", "--suite", "errata", "--format", "json")
    recs = records(out.out)
    assert code == 0
    assert recs and all(r["status"] == "erratum-note" for r in recs)
    targets = {r["id"].split(".")[1] for r in recs}
    assert {"P", "Lambda", "H"} <= targets


def test_text_output_ends_with_summary(capsys):
    code, out = run(capsys, "verify", "--suite", "dkp")
    assert code == 0
    assert out.out.splitlines()[-1].endswith("0 fail, 0 erratum-note")


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "momentum", "--mass", "0"],
    ["verify", "--tol", "0"],
    ["verify", "--tol", "-1e-9"],
    ["verify", "--suite", "nonsense"],
    ["verify", "--mass", "abc"],
    ["scan-dispersion", "--grid", "5"],
    ["scan-dispersion", "--grid", "1", "--out", "x.csv"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_impossible_tolerance_exits_1(capsys):
    code, out = run(capsys, "verify", "--suite", "schroedinger", "--tol", "1e-300", "--format", "json")
    assert code == 1
    assert any(r["status"] == "fail" for r in records(out.out))


def test_tolerance_flag_reaches_records(capsys):
    _, out = run(capsys, "verify", "--suite", "fieldtheory", "--tol", "1e-8", "--format", "json")
    recs = {r["id"]: r for r in records(out.out)}
    assert recs["fieldtheory.canonical_conservation"]["tolerance"] == 1e-8
    assert recs["fieldtheory.trace.canonical"]["tolerance"] == 1e-12


def test_json_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "mcs_dkp", "verify", "--format", "json", "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_seed_changes_random_inputs(capsys):
    _, a = run(capsys, "verify", "--suite", "momentum", "--format", "json", "--seed", "1")
    _, b = run(capsys, "verify", "--suite", "momentum", "--format", "json", "--seed", "2")
    assert a.out != b.out


def test_scan_writes_expected_rows(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code, printed = run(capsys, "scan-dispersion", "--grid", "11", "--mass", "12", "--out", str(out))
    assert code == 0
    assert "121 rows" in printed.out and "max relative error" in printed.out
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    row = next(r for r in rows if (float(r["p1"]), float(r["p2"])) == (3.0, 4.0))
    assert float(row["p0_found"]) == pytest.approx(13.0, abs=1e-12)
    assert float(row["abs_err"]) < 1e-12
    assert all(float(r["p0_found"]) >= 12.0 for r in rows)


def test_scan_grid_two(tmp_path, capsys):
    out = tmp_path / "g2.csv"
    code, _ = run(capsys, "scan-dispersion", "--grid", "2", "--mass", "1", "--out", str(out))
    assert code == 0
    assert len(out.read_text().splitlines()) == 1 + 4


def test_scan_unwritable_path(tmp_path, capsys):
    code, out = run(capsys, "scan-dispersion", "--grid", "2", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2
    assert "cannot write" in out.err
