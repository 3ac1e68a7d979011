import json

import pytest

from alcoved.cli import main
from alcoved.fileformat import dumps, read
from alcoved.polytopes import make_chain_simplex, make_cube, make_qd, make_sharp_distance_example


def _file(tmp_path, P, name="p.json"):
    path = tmp_path / name
    path.write_text(dumps(P) + "\n")
    return str(path)


def test_gen_directory_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["gen", "--dim", "3", "--count", "2", "--seed", "7", "--out", str(a)]) == 0
    assert main(["gen", "--dim", "3", "--count", "2", "--seed", "7", "--out", str(b)]) == 0
    fa = sorted(a.iterdir())
    assert len(fa) == 2
    for x in fa:
        assert x.read_bytes() == (b / x.name).read_bytes()


def test_gen_small_fits_box(tmp_path):
    out = tmp_path / "s.jsonl"
    assert main(["gen", "--dim", "2", "--seed", "0", "--small", "--count", "3", "--out", str(out)]) == 0
    from alcoved.lattice_core import tight_bounds

    for P, meta in read(out):
        assert meta["generator"] == "small"
        assert all(-1 <= lo and hi <= 2 for lo, hi in tight_bounds(P.hrep))


def test_gen_usage_errors(tmp_path, capsys):
    assert main(["gen", "--dim", "1", "--out", str(tmp_path / "x.jsonl")]) == 1
    assert main(["gen", "--dim", "3", "--count", "0"]) == 1
    assert main(["frobnicate"]) == 1


def test_gen_output_accepted_everywhere(tmp_path, capsys):
    out = tmp_path / "g"
    main(["gen", "--dim", "2", "--count", "3", "--seed", "1", "--out", str(out)])
    for f in sorted(out.iterdir()):
        assert main(["hstar", str(f)]) == 0
        assert main(["triangulate", str(f)]) == 0
        assert main(["triangulate", str(f), "--method", "boundary"]) in (0, 2)


def test_hstar_cmd(tmp_path, capsys):
    assert main(["hstar", _file(tmp_path, make_qd(3))]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["hstar"] == [1, 11, 11, 1] and rec["symmetric"] and rec["reflexive"]
    assert main(["hstar", _file(tmp_path, make_chain_simplex(4))]) == 0
    assert json.loads(capsys.readouterr().out)["hstar"] == [1, 0, 0, 0, 0]


def test_hstar_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "constraints": [[1, 2]]}\n')
    assert main(["hstar", str(bad)]) == 1
    out = capsys.readouterr()
    assert out.out == "" and "constraint" in out.err
    assert main(["hstar", str(tmp_path / "missing.json")]) == 1


def test_scan_cmd(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["scan", "--dim", "3", "--count", "50", "--seed", "1", "--out", str(out), "--no-timestamps"]) == 0
    rep = json.loads(out.read_text())
    assert len(rep["records"]) == 50 and all(r["unimodal"] for r in rep["records"])
    assert "wall_time" not in rep["records"][0]
    assert main(["scan", "--dim", "3", "--count", "0"]) == 1
    assert main(["scan", "--dim", "3", "--checks", "bogus"]) == 1


def test_scan_table(capsys):
    assert main(["scan", "--dim", "2", "--count", "2", "--table", "--no-timestamps"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("2\t1,")


def test_scan_jobs_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = ["scan", "--dim", "3", "--count", "8", "--seed", "4", "--no-timestamps"]
    assert main(base + ["--out", str(a)]) == 0
    assert main(base + ["--jobs", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_triangulate_cmd(tmp_path, capsys):
    assert main(["triangulate", _file(tmp_path, make_qd(2)), "--method", "alcove"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["n_cells"] == 6 and rec["h_vector"] == [1, 4, 1, 0]
    assert main(["triangulate", _file(tmp_path, make_cube(2, -1, 1)), "--method", "boundary"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["n_cells"] == 8 and all([0, 0] in c for c in rec["cells"])
    assert rec["boundary"]["is_boundary_triangulation"]


def test_triangulate_sharp_diagnostic(tmp_path, capsys):
    path = _file(tmp_path, make_sharp_distance_example(3))
    assert main(["triangulate", path, "--method", "boundary"]) == 2
    err = capsys.readouterr().err
    assert "x_1 <= 3" in err and "distance 2" in err


def test_triangulate_dimension_limit(tmp_path, capsys):
    path = _file(tmp_path, make_chain_simplex(6))
    assert main(["triangulate", path, "--method", "boundary"]) == 1
    assert main(["triangulate", path, "--method", "alcove"]) == 0
    capsys.readouterr()
    assert main(["triangulate", _file(tmp_path, make_chain_simplex(7), "c7.json"), "--budget", "1000"]) == 0
    assert "warning" in capsys.readouterr().err


def test_verify_refuses_large(capsys):
    assert main(["verify", "--dim-max", "20"]) == 1
    assert "dim-max" in capsys.readouterr().err


@pytest.mark.slow
def test_verify_dim3(capsys):
    assert main(["verify", "--dim-max", "3"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 10 and "FAIL" not in out
