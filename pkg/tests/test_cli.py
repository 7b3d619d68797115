import csv
import io
import subprocess
import sys

import pytest

from sincindef.cli import CSV_COLUMNS, main, parse_n_list


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_integrate_rows():
    code, text = run("integrate", "--formula", "de2", "--problem", "1", "--n", "40", "--x", "0.0", "--x", "0.5")
    assert code == 0
    table = rows(text)
    assert table[0] == ["x", "approx", "exact", "abs_error"]
    assert len(table) == 3
    assert abs(float(table[1][1]) - 0.5) < 1e-9
    assert float(table[2][3]) < 1e-9


def test_integrate_order_two():
    code, text = run("integrate", "--formula", "de3", "--problem", "3", "--n", "60", "--order", "2", "--points", "9")
    assert code == 0
    assert max(float(r[3]) for r in rows(text)[1:]) < 1e-8


def test_integrate_endpoint_is_an_error(capsys):
    code, _ = run("integrate", "--formula", "se1", "--problem", "1", "--n", "10", "--x", "1.0")
    assert code != 0
    assert "error:" in capsys.readouterr().err


def test_unknown_formula_is_usage_error():
    with pytest.raises(SystemExit) as info:
        run("integrate", "--formula", "se9", "--problem", "1", "--n", "10")
    assert info.value.code == 2


def test_n_list_parsing():
    assert parse_n_list("5:50:5") == list(range(5, 51, 5))
    assert parse_n_list("3") == [3]
    with pytest.raises(Exception):
        parse_n_list("10:5:1")


def test_sweep_stdout():
    code, text = run("sweep", "--formula", "de2", "--formula", "se1", "--problem", "3",
                     "--n-list", "5:75:5", "--points", "50", "--repeats", "1")
    assert code == 0
    table = rows(text)
    assert table[0] == CSV_COLUMNS
    assert len(table) == 1 + 2 * 15
    assert all(len(r) == len(CSV_COLUMNS) for r in table)


def test_sweep_file_is_deterministic(tmp_path):
    path = tmp_path / "s.csv"
    args = ["sweep", "--formula", "de3", "--problem", "2", "--n-list", "4:12:4", "--points", "40",
            "--repeats", "1", "--output", str(path)]
    assert run(*args)[0] == 0
    first = rows(path.read_text(encoding="utf-8"))
    assert run(*args)[0] == 0
    second = rows(path.read_text(encoding="utf-8"))
    drop_time = lambda t: [r[:-1] for r in t]
    assert drop_time(first) == drop_time(second)
    assert b"\r\n" not in path.read_bytes()


def test_sweep_bounds_overlay_and_plot(tmp_path):
    path, plot = tmp_path / "s.csv", tmp_path / "s.gp"
    code, _ = run("sweep", "--formula", "de1", "--problem", "1", "--n-list", "10:20:10", "--points", "30",
                  "--repeats", "1", "--bounds-overlay", "--output", str(path), "--plot-script", str(plot))
    assert code == 0
    table = rows(path.read_text())
    assert table[0] == CSV_COLUMNS + ["rate_curve"]
    assert all(float(r[-1]) > 0 for r in table[1:])
    assert str(path) in plot.read_text()


def test_sweep_unwritable_output(tmp_path, capsys):
    code, _ = run("sweep", "--formula", "de2", "--problem", "1", "--n-list", "5", "--points", "10",
                  "--output", str(tmp_path / "missing" / "x.csv"))
    assert code != 0
    assert "cannot write" in capsys.readouterr().err


def test_compare():
    code, text = run("compare", "--formula", "de2", "--formula", "se1", "--problem", "3", "--n-list", "2:40:2",
                     "--points", "100", "--repeats", "1")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].startswith("# smallest n")
    de2 = [l.split() for l in lines if " DE2 " in l][0]
    se1 = [l.split() for l in lines if " SE1 " in l][0]
    assert int(de2[2]) <= 40 and float(de2[3]) < 1e-8
    assert se1[2] == "-"


def test_bounds_command():
    code, text = run("bounds", "--problem", "1", "--formula", "de2", "--n-list", "10:30:10")
    assert code == 0
    table = rows(text)
    assert len(table) == 4
    lam = float(table[1][6])
    assert lam > 0 and float(table[3][7]) < float(table[1][7])


def test_backend_flag():
    code, _ = run("--backend", "numpy", "integrate", "--formula", "se3", "--problem", "2", "--n", "8", "--x", "0.1")
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sincindef", "integrate", "--formula", "de1", "--problem", "3", "--n", "20",
         "--x", "0.25"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout.startswith("x,approx,exact,abs_error\n")
