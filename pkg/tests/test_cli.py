import io
from contextlib import redirect_stdout

import pytest

from pointschemes import cli

QPLANE = "field 5\nvertices v\narrow x: v -> v\narrow y: v -> v\nrel r: x.y - 2*y.x\n"
COMM_F3 = "field 3\nvertices v\narrow x: v -> v\narrow y: v -> v\nrel r: x.y - y.x\n"
QUIVER_F2 = "field 2\nvertices u w\narrow a: u -> w\narrow b: w -> u\n"
FREE_F2 = "field 2\nvertices v\narrow x: v -> v\narrow y: v -> v\n"
COMM_Q = "field Q\nvertices v\narrow x: v -> v\narrow y: v -> v\nrel r: x.y - y.x\n"


def run_cli(args):
    out = io.StringIO()
    with redirect_stdout(out):
        status = cli.main(args)
    return status, out.getvalue()


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_gamma_comm_f3(tmp_path):
    path = write(tmp_path, "comm.alg", COMM_F3)
    status, out = run_cli(["gamma", "-n", "2", path])
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "# gamma n=2 field=3 algebra=comm"
    assert len(lines) == 5  # header + 4 rows


def test_gamma_two_vertex_quiver(tmp_path):
    path = write(tmp_path, "quiver.alg", QUIVER_F2)
    status, out = run_cli(["gamma", "-n", "1", path])
    assert status == 0
    rows = out.splitlines()[1:]
    assert rows == ["u,w\t1", "w,u\t1"]


def test_sigma_quantum(tmp_path):
    path = write(tmp_path, "qplane.alg", QPLANE)
    status, out = run_cli(["sigma", "-d", "1", path])
    assert status == 0
    lines = out.splitlines()
    mappings = [l for l in lines if "\t->\t" in l]
    assert len(mappings) == 6
    assert "# orbits 1,1,4" in lines


def test_sigma_fat_fiber_is_precondition_error(tmp_path, capsys):
    path = write(tmp_path, "free.alg", FREE_F2)
    status = cli.main(["sigma", "-d", "1", path])
    assert status == cli.EXIT_PRECONDITION
    assert "fiber over" in capsys.readouterr().err


def test_stabilize_quantum(tmp_path):
    path = write(tmp_path, "qplane.alg", QPLANE)
    status, out = run_cli(["stabilize", "--max", "3", path])
    assert status == 0
    assert "stabilize at d=1" in out or "stabilize at d=1" in out.replace("fibers ", "")
    assert "orbit lengths 1,1,4" in out


def test_verify_passes(tmp_path):
    path = write(tmp_path, "comm.alg", COMM_F3)
    status, out = run_cli(["verify", "--max-n", "2", path])
    assert status == 0
    assert "FAIL" not in out
    assert out.strip().endswith("properties passed")


def test_verify_rational_field_skips_enumeration(tmp_path):
    path = write(tmp_path, "commq.alg", COMM_Q)
    status, out = run_cli(["verify", path])
    assert status == 0
    assert "skipped" in out


def test_verify_property_failure_exit(tmp_path, monkeypatch):
    from pointschemes.verify import PropertyResult

    path = write(tmp_path, "comm.alg", COMM_F3)
    monkeypatch.setattr(
        cli, "run_invariant_suite", lambda A, max_n, cap: [PropertyResult("forced", False, "x")]
    )
    status, out = run_cli(["verify", path])
    assert status == cli.EXIT_PROPERTY
    assert "FAIL\tforced" in out


def test_segre_check(tmp_path):
    path = write(tmp_path, "qplane.alg", QPLANE)
    status, out = run_cli(["segre-check", "-n", "2", path])
    assert status == 0
    assert out.count("PASS") == 4


def test_parse_error_exit(tmp_path, capsys):
    path = write(tmp_path, "bad.alg", "field 5\nvertices v\narrow x: v -> v\nrel r: x - x.x\n")
    status = cli.main(["gamma", "-n", "1", path])
    assert status == cli.EXIT_PARSE
    assert "parse error" in capsys.readouterr().err


def test_missing_file_is_parse_error(tmp_path, capsys):
    status = cli.main(["gamma", "-n", "1", str(tmp_path / "absent.alg")])
    assert status == cli.EXIT_PARSE


def test_cap_exit(tmp_path, capsys):
    path = write(tmp_path, "free.alg", FREE_F2)
    status = cli.main(["gamma", "-n", "4", "--cap", "10", path])
    assert status == cli.EXIT_CAP
    assert "cap exceeded" in capsys.readouterr().err


def test_precondition_exit_on_rationals(tmp_path, capsys):
    path = write(tmp_path, "commq.alg", COMM_Q)
    status = cli.main(["gamma", "-n", "1", path])
    assert status == cli.EXIT_PRECONDITION


def test_output_file_matches_stdout(tmp_path):
    path = write(tmp_path, "qplane.alg", QPLANE)
    _, stdout_text = run_cli(["gamma", "-n", "2", path])
    out_file = tmp_path / "report.tsv"
    status, _ = run_cli(["gamma", "-n", "2", path, "-o", str(out_file)])
    assert status == 0
    assert out_file.read_text() == stdout_text


def test_gamma_deterministic_across_runs_and_workers(tmp_path):
    path = write(tmp_path, "qplane.alg", QPLANE)
    outputs = [
        run_cli(["gamma", "-n", "3", path, "--workers", w])[1] for w in ("1", "1", "4")
    ]
    assert outputs[0] == outputs[1] == outputs[2]
