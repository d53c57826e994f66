import csv
import io
import json
import subprocess
import sys

import pytest

from gelfand.cli import main
from gelfand.semigroup.adapters import left_zero_table


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def left0(tmp_path):
    path = tmp_path / "left0.json"
    path.write_text(json.dumps(left_zero_table(2)))
    return path


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("MODEL", "N", "Q0", "FORMAT", "OUT", "DEEP", "SEED", "ALLOW_LARGE", "VARIANT", "NO_TIMING"):
        monkeypatch.delenv("GELFAND_" + name, raising=False)


# -- build -------------------------------------------------------------------------

def test_build_sn3(capsys):
    code, out, _ = run(["build", "--model", "sn", "--n", "3"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 4
    assert data["basis"] == [[1, 2, 3], [1, 3, 2], [2, 1, 3], [3, 2, 1]]
    assert set(data["generators"]) == {"s1", "s2"}


def test_build_qrook2_has_polynomial_entries(capsys):
    code, out, _ = run(["build", "--model", "qrook", "--n", "2"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 5
    assert set(data["generators"]) == {"T1", "P1", "P2"}
    entries = [v for row in data["generators"]["T1"] for v in row]
    assert ["-1", "1"] in entries  # q - 1 as coefficient list


def test_build_qrook2_csv(capsys):
    code, out, _ = run(["build", "--model", "qrook", "--n", "2", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["matrix", "row", "col", "value"]
    assert sum(r[0] == "basis" for r in rows[1:]) == 5
    assert {r[0] for r in rows[1:]} == {"basis", "T1", "P1", "P2"}
    assert "[-1,1]" in {r[3] for r in rows if r[0] == "T1"}


def test_build_left_zero_table_is_a_hypothesis_failure(capsys, left0):
    code, out, _ = run(["build", "--model", f"table:{left0}"], capsys)
    assert code == 2
    report = json.loads(out)
    assert report["status"] == "hypothesis_failure"
    assert any("trace not inverse" in f for f in report["failures"])


def test_build_over_capacity(capsys):
    code, out, err = run(["build", "--model", "sn", "--n", "9"], capsys)
    assert code == 2
    assert out == ""
    assert "capacity" in err


def test_build_to_file(tmp_path, capsys):
    target = tmp_path / "hecke.json"
    code, out, _ = run(["build", "--model", "hecke", "--n", "3", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["dimension"] == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--model", "nonsense", "--n", "3"],
        ["build", "--n", "3"],
        ["build", "--model", "hecke", "--n", "3", "--q0", "0"],
        ["build", "--model", "hecke"],
    ],
)
def test_bad_configurations_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_malformed_q0_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--model", "hecke", "--n", "3", "--q0", "x/y"])
    assert exc.value.code == 2


# -- verify --------------------------------------------------------------------------

@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--model", "hecke", "--n", "4"],
        ["verify", "--model", "isn", "--n", "3"],
        ["verify", "--model", "qrook", "--n", "3", "--q0", "1"],
        ["verify", "--model", "sn", "--n", "4"],
        ["verify", "--model", "fstar", "--n", "3"],
    ],
)
def test_verify_examples_pass(argv, capsys):
    code, out, _ = run(argv, capsys)
    report = json.loads(out)
    assert code == 0, [c for c in report["checks"] if c["status"] == "fail"]
    assert report["status"] == "pass"


def test_verify_hecke_reports_commutant(capsys):
    _, out, _ = run(["verify", "--model", "hecke", "--n", "4"], capsys)
    report = json.loads(out)
    assert report["certificate"]["commutant_dimension"] == 5
    assert report["certificate"]["verdict"] == "gelfand"


def test_verify_support_variant_fails(capsys):
    code, out, _ = run(["verify", "--model", "hecke", "--n", "4", "--variant", "support"], capsys)
    assert code == 1
    report = json.loads(out)
    assert report["status"] == "verification_failure"
    assert report["certificate"]["commutant_dimension"] == 12


def test_verify_left_zero_table(capsys, left0):
    code, _, _ = run(["verify", "--model", f"table:{left0}"], capsys)
    assert code == 2


def test_verify_csv(capsys):
    code, out, _ = run(["verify", "--model", "hecke", "--n", "3", "--format", "csv"], capsys)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["check", "status", "required"]
    assert rows[-1][:2] == ["overall", "pass"]


# -- decompose -----------------------------------------------------------------------

def test_decompose_sn4(capsys):
    code, out, _ = run(["decompose", "--model", "sn", "--n", "4"], capsys)
    assert code == 0
    sectors = {s["k"]: s for s in json.loads(out)["sectors"]}
    assert sectors[0]["dimension"] == 1
    assert sectors[1]["dimension"] == 6
    assert sectors[2]["dimension"] == 3
    assert sectors[0]["rs_shapes"] == [[4]]


@pytest.mark.parametrize("n", range(1, 6))
def test_decompose_sector_zero_is_trivial(n, capsys):
    _, out, _ = run(["decompose", "--model", "sn", "--n", str(n)], capsys)
    sector = json.loads(out)["sectors"][0]
    assert sector["dimension"] == 1
    assert sector["rs_shapes"] == [[n]]


def test_decompose_rejects_other_models(capsys):
    code, _, err = run(["decompose", "--model", "hecke", "--n", "3"], capsys)
    assert code == 2 and "sn" in err


# -- environment and determinism -----------------------------------------------------

def test_environment_supplies_defaults(monkeypatch, capsys):
    monkeypatch.setenv("GELFAND_MODEL", "sn")
    monkeypatch.setenv("GELFAND_N", "4")
    code, out, _ = run(["decompose"], capsys)
    assert code == 0
    assert json.loads(out)["n"] == 4


def test_flags_override_environment(monkeypatch, capsys):
    monkeypatch.setenv("GELFAND_MODEL", "hecke")
    monkeypatch.setenv("GELFAND_N", "5")
    monkeypatch.setenv("GELFAND_FORMAT", "csv")
    code, out, _ = run(["build", "--model", "sn", "--n", "3", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["dimension"] == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--model", "qrook", "--n", "3"],
        ["build", "--model", "isn", "--n", "3", "--format", "csv"],
        ["decompose", "--model", "sn", "--n", "5"],
        ["verify", "--model", "isn", "--n", "3", "--no-timing"],
    ],
)
def test_outputs_are_byte_identical(argv, tmp_path, capsys):
    first, second = tmp_path / "a", tmp_path / "b"
    assert main([*argv, "--out", str(first)]) == 0
    assert main([*argv, "--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_sampled_checks_depend_only_on_seed(tmp_path):
    outs = []
    for name in ("a", "b"):
        path = tmp_path / name
        main(["verify", "--model", "fstar", "--n", "4", "--seed", "7", "--no-timing", "--out", str(path)])
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gelfand", "build", "--model", "sn", "--n", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dimension"] == 2
