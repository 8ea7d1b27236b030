import json

import pytest

from omforge.cli import EXIT_INVALID, EXIT_OK, EXIT_UNDETERMINED, run
from omforge.corpus import cyclic_om, cyclic_points, w3
from omforge.fileio import write_chi, write_pts


@pytest.fixture()
def w3_chi(tmp_path):
    path = tmp_path / "w3.chi"
    write_chi(path, w3().chirotope)
    return str(path)


@pytest.fixture()
def c48_pts(tmp_path):
    path = tmp_path / "c48.pts"
    write_pts(path, cyclic_points(4, 8))
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    run_json.err = captured.err
    return code, json.loads(captured.out)


def test_cocircuits(w3_chi, capsys):
    code, payload = run_json(capsys, ["cocircuits", w3_chi])
    assert code == EXIT_OK
    assert payload["cocircuits"] == ["++0", "+0-", "--0", "-0+", "0++", "0--"]
    assert "seed" in payload


def test_euclidean(w3_chi, capsys):
    code, payload = run_json(capsys, ["euclidean", w3_chi, "--g", "0", "--f", "1"])
    assert code == EXIT_OK
    assert payload["euclidean"] is True


def test_euclidean_all(c48_pts, capsys):
    code, payload = run_json(capsys, ["euclidean-all", c48_pts])
    assert code == EXIT_OK
    assert payload["euclidean_all_programs"] is True
    assert payload["totally_non_euclidean"] is False
    assert len(payload["verdicts"]) == 56


def test_mutations_b(c48_pts, capsys):
    code, payload = run_json(capsys, ["mutations", c48_pts])
    assert code == EXIT_OK
    assert payload["L"] == 4
    assert all(v >= 4 for v in payload["adjacency"].values())


def test_validate_good_and_bad(tmp_path, capsys):
    good = tmp_path / "good.chi"
    write_chi(good, cyclic_om(3, 5).chirotope)
    code, payload = run_json(capsys, ["validate", str(good)])
    assert code == EXIT_OK and payload["ok"]
    bad = tmp_path / "bad.chi"
    bad.write_text("2 4\n++++-+\n")
    code, payload = run_json(capsys, ["validate", str(bad)])
    assert code == EXIT_INVALID and not payload["ok"]


def test_topes(w3_chi, capsys):
    code, payload = run_json(capsys, ["topes", w3_chi])
    assert code == EXIT_OK
    assert payload["count"] == 6


def test_lexext_flip_pipeline(tmp_path, capsys, c48_pts):
    code, payload = run_json(capsys, ["lexext", c48_pts, "--spec", "0:+,1:+,2:+,3:+"])
    assert code == EXIT_OK
    assert payload["n"] == 9 and payload["new_element"] == 8
    code, payload = run_json(capsys, ["flip", c48_pts, "--basis", "0,1,2,3"])
    assert code == EXIT_OK
    assert payload["chirotope"].count("-") == 1


def test_mandel_pipeline_cmd(c48_pts, capsys):
    code, payload = run_json(
        capsys, ["mandel-pipeline", c48_pts, "--mutation", "0,1,2,3", "--g", "5"]
    )
    assert code == EXIT_OK
    assert payload["ok"] is True


def test_mutation_graph_budget(tmp_path, capsys):
    seed = tmp_path / "c36.chi"
    write_chi(seed, cyclic_om(3, 6).chirotope)
    code, payload = run_json(capsys, ["--max-nodes", "2", "mutation-graph", str(seed)])
    assert code == EXIT_UNDETERMINED
    assert payload["budget_exhausted"]
    code, payload = run_json(capsys, ["--max-nodes", "50", "mutation-graph", str(seed)])
    assert code == EXIT_OK
    assert len(payload["nodes"]) == 4


def test_classify_cmd(tmp_path, capsys):
    seed = tmp_path / "c36.chi"
    write_chi(seed, cyclic_om(3, 6).chirotope)
    code, payload = run_json(capsys, ["classify", str(seed)])
    assert code == EXIT_OK
    assert payload["euclidean_all_programs"] is True
    assert payload["las_vergnas"] is True
    assert payload["L"] == 3


def test_summary_cmd(tmp_path, capsys, w3_chi):
    code, payload = run_json(capsys, ["summary", w3_chi])
    assert code == EXIT_OK
    assert payload["rows"]["all"]["min_L"] == 2


def test_out_file_and_seed(tmp_path, w3_chi, capsys):
    out = tmp_path / "res.json"
    code = run(["--seed", "7", "--out", str(out), "cocircuits", w3_chi])
    assert code == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["seed"] == 7


def test_io_error(capsys):
    assert run(["cocircuits", "/nonexistent/x.chi"]) == 1


def test_acceptance_cmd_direct_sum(capsys):
    code, payload = run_json(capsys, ["acceptance", "direct-sum"])
    assert code == EXIT_OK
    assert payload["ok"] is True
    # one pass/fail line per criterion on stderr
    assert "[PASS] 10 direct-sum-counting" in run_json.err
