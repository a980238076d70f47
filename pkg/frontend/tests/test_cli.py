import os
import re

from dominance_plots.cli import main

from conftest import tenths_sweep, write_csv

AUDIT = re.compile(r"^audit (.+): rows=(\d+) points=(\d+)$")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_end_to_end_with_audit(tmp_path, capsys):
    path = write_csv(tmp_path / "sweep.csv", tenths_sweep(degrees=(3, 4)))
    out = tmp_path / "figs" / "freq.png"
    code, stdout, _ = run(
        capsys, "--input", path, "--kind", "frequency-curve", "--out", str(out), "--audit"
    )
    assert code == 0
    lines = stdout.splitlines()
    wrote = [l for l in lines if l.startswith("wrote ")]
    assert len(wrote) == 2
    for l in wrote:
        assert os.path.exists(l.removeprefix("wrote "))
    audits = [AUDIT.match(l) for l in lines if l.startswith("audit ")]
    assert len(audits) == 2
    for m in audits:
        assert m and m.group(2) == m.group(3) == "9"
    assert lines[-1] == "audit: OK"


def test_format_follows_output_extension(tmp_path, capsys):
    path = write_csv(tmp_path / "sweep.csv", tenths_sweep(degrees=(3,)))
    code, stdout, _ = run(
        capsys, "--input", path, "--kind", "frequency-curve",
        "--out", str(tmp_path / "f.svg"),
    )
    assert code == 0
    assert stdout.strip().endswith(".svg")


def test_filters_parse_ranges(tmp_path, capsys):
    rows = tenths_sweep(degrees=(3, 4, 5, 6))
    path = write_csv(tmp_path / "sweep.csv", rows)
    code, stdout, _ = run(
        capsys, "--input", path, "--kind", "frequency-curve",
        "--out", str(tmp_path / "f.png"), "--d", "4-5", "--n", "3", "--model", "basic",
    )
    assert code == 0
    assert [l for l in stdout.splitlines() if l.startswith("wrote ")] == [
        f"wrote {tmp_path}/f_basic_n3_d4.png",
        f"wrote {tmp_path}/f_basic_n3_d5.png",
    ]


def test_errors_exit_2(tmp_path, capsys):
    code, _, stderr = run(
        capsys, "--input", str(tmp_path / "missing.csv"), "--kind", "frequency-curve",
        "--out", str(tmp_path / "f.png"),
    )
    assert code == 2
    assert "error:" in stderr

    path = write_csv(tmp_path / "sweep.csv", tenths_sweep(degrees=(3,)))
    code, _, stderr = run(
        capsys, "--input", path, "--kind", "frequency-curve",
        "--out", str(tmp_path / "f.png"), "--model", "graded",
    )
    assert code == 2
    assert "not present" in stderr
    assert not list(tmp_path.glob("*.png"))
