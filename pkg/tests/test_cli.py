"""CLI surface: CSV schemas, exit codes, determinism."""


import pytest

from certzero import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_zeros_basic(capsys):
    code, out, _ = run(["zeros", "--nu", "1", "--m", "1..3"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "nu,m,j_point,j_lower,j_upper,width"
    assert len(lines) == 4
    for line in lines[1:]:
        assert float(line.split(",")[5]) > 0.0


def test_zeros_check_column(capsys):
    code, out, _ = run(["zeros", "--nu", "1", "--m", "1", "--check"], capsys)
    assert code == 0
    header, row = out.splitlines()
    assert header.endswith(",oracle,inside")
    assert row.endswith(",true")


def test_zeros_hypothesis_gate(capsys):
    code, _, err = run(["zeros", "--nu", "0.5", "--m", "1"], capsys)
    assert code == 2
    assert "nu" in err


def test_zeros_bad_m_range(capsys):
    code, _, err = run(["zeros", "--nu", "1", "--m", "3..1"], capsys)
    assert code == 2
    assert "m" in err


def test_scan_p1_unsupported(capsys):
    code, _, err = run(["scan", "p1"], capsys)
    assert code == 3
    assert "unsupported" in err


def test_scan_summary_row(capsys):
    code, out, _ = run(["scan", "p7", "--samples", "400"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "v,value"
    assert lines[-2] == "min,max,argmin,argmax,all_positive"
    summary = lines[-1].split(",")
    assert abs(float(summary[1]) - 0.99615) < 1e-3


def test_constants_table(capsys):
    code, out, _ = run(["constants"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "name,computed,paper,abs_diff,tolerance,pass"
    assert all(line.endswith(",true") for line in lines[1:])


def test_constants_unknown_name(capsys):
    code, _, err = run(["constants", "nope"], capsys)
    assert code == 2
    assert "name" in err


def test_verify_small_grid(capsys):
    code, out, _ = run(["verify", "--nu", "1,2", "--m", "1..3"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[-2] == "pass_count,fail_count"
    assert lines[-1] == "6,0"


def test_oracle_command(capsys):
    code, out, _ = run(["oracle", "--nu", "2", "--m", "3"], capsys)
    assert code == 0
    root = float(out.splitlines()[1].split(",")[2])
    assert abs(root - 11.619841172149059) < 1e-10
    code, out, _ = run(["oracle", "--nu", "2", "--x", "1.0"], capsys)
    assert code == 0
    code, _, err = run(["oracle", "--nu", "2"], capsys)
    assert code == 2


def test_deterministic_output(capsys):
    _, first, _ = run(["zeros", "--nu", "1,3", "--m", "1..4"], capsys)
    _, second, _ = run(["zeros", "--nu", "1,3", "--m", "1..4"], capsys)
    assert first == second


def test_out_file_newlines(tmp_path, capsys):
    path = tmp_path / "rows.csv"
    code, out, _ = run(["zeros", "--nu", "1", "--m", "1", "--out",
                        str(path)], capsys)
    assert code == 0 and out == ""
    data = path.read_bytes()
    assert b"\r" not in data
    assert data.endswith(b"\n")
