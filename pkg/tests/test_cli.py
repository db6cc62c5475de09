import io
import json
import subprocess
import sys

import pytest

from f2conics.cli import EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, default_workers, dispatch
from f2conics.tables import Table, parse_csv, parse_json, parse_table


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_symbol_command():
    code, out, _ = run("symbol", "--y", "1/(t+1)", "--place", "t+1", "--format", "json")
    assert code == EXIT_OK
    row = json.loads(out)["rows"][0]
    assert row["symbol"] == 1 and row["place"] == "t+1"
    code, out, _ = run("symbol", "--y", "t", "--place", "inf", "--format", "csv")
    assert parse_csv(out).rows[0]["symbol"] == 0


def test_bad_polynomial_reports_position():
    code, _, err = run("symbol", "--y", "1/(t+q)", "--place", "t")
    assert code == EXIT_INVALID
    assert "position 5" in err
    code, _, err = run("symbol", "--y", "t", "--place", "t^2+1")
    assert code == EXIT_INVALID and "irreducible" in err


def test_compare_columns_identical():
    code, out, _ = run("compare", "--max", "6", "--workers", "1", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)["rows"]
    assert [r["census"] for r in rows] == [r["euler"] for r in rows] == [1, 2, 7, 24, 86, 304, 1128]


def test_census_cap_is_validation_error():
    code, _, err = run("census", "--max-log-height", "99")
    assert code == EXIT_INVALID and "--allow-large" in err


@pytest.mark.parametrize("argv", [
    ["census"],
    ["census", "--max-log-height", "-1"],
    ["census", "--max-log-height", "3", "--unknown"],
    ["census", "--max-log-height", "3", "--workers", "0"],
    ["series", "--order", "0"],
    ["tauberian", "--max", "10"],
    ["tauberian", "--selftest", "--max", "4"],
    ["constant", "--max-degree", "1"],
    ["hankel", "--b", "3", "--m", "10"],
    ["measure", "--place", "t", "--k", "1"],
    ["nonsense"],
])
def test_validation_errors(argv):
    assert run(*argv)[0] == EXIT_INVALID


def test_census_csv(tmp_path):
    path = tmp_path / "census.csv"
    code, out, _ = run("census", "--max-log-height", "5", "--workers", "1", "--out", str(path))
    assert code == EXIT_OK and out == ""
    table = parse_csv(path.read_text())
    assert table.columns == ["M", "total", "soluble", "euler_coefficient", "ratio_to_asymptotic"]
    assert [r["soluble"] for r in table.rows] == [r["euler_coefficient"] for r in table.rows]
    assert table.rows[0]["ratio_to_asymptotic"] is None
    assert table.config["max_log_height"] == 5 and table.config["workers"] == 1
    assert table.checks["euler_agrees"] is True


def test_census_parallel_matches_serial():
    _, serial, _ = run("census", "--max-log-height", "7", "--workers", "1", "--format", "json")
    _, par, _ = run("census", "--max-log-height", "7", "--workers", "2", "--format", "json")
    assert json.loads(serial)["rows"] == json.loads(par)["rows"]


def test_census_without_cross_check():
    code, out, _ = run("census", "--max-log-height", "3", "--no-cross-check", "--workers", "1")
    assert code == EXIT_OK
    assert "euler_coefficient" not in parse_csv(out).columns


def test_mismatch_exit_code(monkeypatch):
    import f2conics.cli as cli

    class Broken:
        def integers(self):
            return [1, 2, 8, 24]

    monkeypatch.setattr(cli, "z_series", lambda order: Broken())
    code, _, err = run("census", "--max-log-height", "3", "--workers", "1")
    assert code == EXIT_MISMATCH and "M=2" in err


def test_worker_default(monkeypatch):
    monkeypatch.setenv("F2CONICS_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("F2CONICS_WORKERS", "zero")
    assert run("census", "--max-log-height", "2")[0] == EXIT_INVALID


@pytest.mark.parametrize("argv", [
    ["census", "--max-log-height", "4", "--workers", "1"],
    ["series", "--order", "10"],
    ["compare", "--max", "4", "--workers", "1"],
    ["constant", "--max-degree", "12"],
    ["symbol", "--y", "(t^2+1)/t^3", "--place", "t"],
    ["measure", "--place", "t^2+t+1", "--k", "2"],
    ["tauberian", "--selftest", "--max", "64"],
    ["hankel", "--b", "0.5", "--m", "100"],
])
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_tables_roundtrip(argv, fmt):
    code, out, _ = run(*argv, "--format", fmt)
    assert code == EXIT_OK
    table = parse_table(out)
    again = table.to_csv() if fmt == "csv" else table.to_json() + "\n"
    assert again == out
    assert parse_table(again).rows == table.rows


def test_series_values():
    _, out, _ = run("series", "--order", "8", "--format", "json")
    assert [r["coefficient"] for r in json.loads(out)["rows"]] == [1, 2, 7, 24, 86, 304, 1128, 4112]


def test_measure_and_constant_outputs():
    _, out, _ = run("measure", "--place", "0x7", "--k", "1", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert (row["count_soluble"], row["count_total"]) == (1, 3)
    _, out, _ = run("constant", "--max-degree", "30")
    data = json.loads(out)
    assert data["rows"][0]["value"] == pytest.approx(0.5378190757, rel=1e-9)
    assert data["checks"]["tail_bound"] < 1e-8


def test_text_format():
    code, out, _ = run("compare", "--max", "3", "--workers", "1")
    assert code == EXIT_OK and "census" in out and "euler" in out


def test_table_rejects_unknown_column():
    with pytest.raises(KeyError):
        Table(["a"]).add(b=1)
    assert parse_json(Table(["a"], [{"a": 1.5}]).to_json()).rows == [{"a": 1.5}]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "f2conics", "symbol", "--y", "1/(t+1)",
                           "--place", "t+1", "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert parse_csv(proc.stdout).rows[0]["symbol"] == 1
