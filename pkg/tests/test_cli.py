import csv
import json

import pytest

from merostar import cli


def write_series(tmp_path, coeffs, name="series.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"coeffs": coeffs}))
    return str(path)


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_pole_is_certified(tmp_path, capsys):
    series = write_series(tmp_path, [])
    code, out, _ = run(capsys, ["check", "--class", "me", "--alpha", "1.0", "--series", series])
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == "me"
    assert payload["status"] == "CertifiedMember"
    assert payload["min_margin"] == 1.0
    assert payload["samples_checked"] == 12 * 2048


def test_check_refutation_exits_one(tmp_path, capsys):
    series = write_series(tmp_path, [[0.0, 0.0], [3.0, 0.0]])
    code, out, _ = run(capsys, ["check", "--class", "me", "--alpha", "1.0", "--series", series])
    assert code == 1
    payload = json.loads(out)
    assert payload["status"] == "NonMember"
    assert payload["min_margin"] < 0
    assert payload["witness"] is not None


def test_check_tme_payload_has_exact_margin(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"magnitudes": [0.2]}))
    code, out, _ = run(capsys, ["check", "--class", "tme", "--alpha", "1.0", "--series", str(path)])
    assert code == 0
    payload = json.loads(out)
    assert payload["class"] == "tme"
    assert payload["status"] == "CertifiedMember"
    assert payload["exact_margin"] == pytest.approx(0.4, abs=1e-12)


def test_check_grid_flags_shrink_the_grid(tmp_path, capsys):
    series = write_series(tmp_path, [])
    code, out, _ = run(
        capsys,
        [
            "check", "--class", "mf", "--alpha", "0.5", "--series", series,
            "--grid-rmax", "0.9", "--grid-theta", "64",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["samples_checked"] == 9 * 64


def test_check_margin_csv(tmp_path, capsys):
    series = write_series(tmp_path, [])
    csv_path = tmp_path / "margins.csv"
    code, _, _ = run(
        capsys,
        [
            "check", "--class", "me", "--alpha", "1.0", "--series", series,
            "--grid-rmax", "0.5", "--grid-theta", "8", "--csv", str(csv_path),
        ],
    )
    assert code == 0
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["radius", "theta", "re", "im", "margin"]
    assert len(rows) == 1 + 5 * 8
    for row in rows[1:]:
        assert float(row[4]) == pytest.approx(1.0)


@pytest.mark.parametrize("name", ["thm21", "thm23", "rem1", "expz", "onemz2"])
def test_extremal_emits_series_json(name, capsys):
    code, out, _ = run(capsys, ["extremal", "--name", name, "--alpha", "1.5", "--n", "2"])
    assert code == 0
    payload = json.loads(out)
    assert "coeffs" in payload
    assert payload["tail_bound"] >= 0.0


def test_extremal_pipe_to_check(tmp_path, capsys):
    code, out, _ = run(capsys, ["extremal", "--name", "thm21", "--alpha", "2.0"])
    assert code == 0
    payload = json.loads(out)
    series = tmp_path / "extremal.json"
    series.write_text(json.dumps({"coeffs": payload["coeffs"]}))
    code, out, _ = run(capsys, ["check", "--class", "me", "--alpha", "2.0", "--series", str(series)])
    assert code == 0
    assert json.loads(out)["status"] == "SampledMember"


def test_suite_writes_report(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    csv_path = tmp_path / "checks.csv"
    code, out, _ = run(
        capsys,
        ["suite", "--name", "rem1", "--out", str(out_path), "--csv", str(csv_path)],
    )
    assert code == 0
    assert "suite rem1: pass" in out
    report = json.loads(out_path.read_text())
    assert report["suite"] == "rem1"
    assert report["passed"] is True
    with open(csv_path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["check", "status", "margin"]
    assert len(rows) == 1 + len(report["checks"])


def test_suite_accepts_overrides(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run(
        capsys,
        ["suite", "--name", "thm2.2", "--count", "10", "--seed", "5", "--out", str(out_path)],
    )
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["inputs"]["count"] == 10
    assert report["inputs"]["seed"] == 5


def test_decompose_member(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"magnitudes": [1.0 / 6.0, 1.0 / 8.0]}))
    code, out, _ = run(capsys, ["decompose", "--series", str(path), "--alpha", "1.0"])
    assert code == 0
    payload = json.loads(out)
    assert payload["alpha"] == 1.0
    assert payload["weights"][0] == pytest.approx(0.0, abs=1e-12)
    assert payload["weights"][1] == pytest.approx(0.5, abs=1e-12)
    assert payload["weights"][2] == pytest.approx(0.5, abs=1e-12)


def test_decompose_non_member_exits_one(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"magnitudes": [0.9]}))
    code, _, err = run(capsys, ["decompose", "--series", str(path), "--alpha", "1.0"])
    assert code == 1
    assert err.startswith("error: not a member")


def test_missing_file_exits_two(tmp_path, capsys):
    code, _, err = run(
        capsys,
        ["check", "--class", "me", "--alpha", "1.0", "--series", str(tmp_path / "nope.json")],
    )
    assert code == 2
    assert err.startswith("error:")


def test_malformed_json_exits_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, ["check", "--class", "me", "--alpha", "1.0", "--series", str(path)])
    assert code == 2
    assert err.startswith("error:")


def test_bad_suite_parameter_exits_two(tmp_path, capsys):
    code, _, err = run(
        capsys,
        ["suite", "--name", "thm3.2", "--delta", "2.0", "--count", "5",
         "--out", str(tmp_path / "r.json")],
    )
    assert code == 2
    assert "delta" in err


def test_usage_errors_raise_system_exit(capsys):
    with pytest.raises(SystemExit):
        cli.main(["check"])
    with pytest.raises(SystemExit):
        cli.main(["suite", "--name", "nope", "--out", "x.json"])
    with pytest.raises(SystemExit):
        cli.main([])
    capsys.readouterr()
