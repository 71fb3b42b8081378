import json
import os

import pytest

from linprod.checks import Bounds, InputError, load_instance
from linprod.cli import bundled_instances, main

from conftest import instance_path


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json", "--no-timings")
    return code, json.loads(out)


def test_bundled_instances_cover_the_worked_examples():
    names = {os.path.basename(p) for p in bundled_instances()}
    assert {"denegri.json", "notquad.json", "three_planes.json", "ne_n3.json", "northeast.json"} <= names


def test_check_northeast_all_pass(capsys):
    code, rep = run_json(capsys, "check", instance_path("northeast.json"), "--n", "3", "--tmax", "2")
    assert code == 0
    assert rep["schema"] == 1 and rep["summary"]["fail"] == 0 and rep["summary"]["pass"] > 0
    for v in rep["instances"][0]["verdicts"].values():
        assert v["status"] == "pass" and v["bounds"]


def test_every_verdict_carries_bounds(capsys):
    _, rep = run_json(capsys, "check", instance_path("notquad.json"), instance_path("three_planes.json"))
    for e in rep["instances"]:
        assert e["bounds"]["tmax"] == 2
        assert all(v["bounds"] for v in e["verdicts"].values())


def test_json_is_deterministic_and_round_trips(capsys, tmp_path):
    args = ["check", instance_path("ne_n3.json"), instance_path("transversal.json"), "--json", "--no-timings"]
    main(args + ["--out", str(tmp_path / "a.json")])
    main(args + ["--out", str(tmp_path / "b.json")])
    capsys.readouterr()
    a = (tmp_path / "a.json").read_bytes()
    assert a == (tmp_path / "b.json").read_bytes()
    rep = json.loads(a)
    assert json.loads(json.dumps(rep, sort_keys=True, indent=2)) == rep
    assert "seconds" not in rep["instances"][0]


def test_malformed_json_exit_3_with_position(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "ideals",\n  "ring": }')
    code, rep = run_json(capsys, "check", str(bad))
    assert code == 3
    assert "line 2" in rep["instances"][0]["message"]
    assert "column" in rep["instances"][0]["message"]


def test_unknown_kind_and_bad_polynomial(capsys, tmp_path):
    p = tmp_path / "k.json"
    p.write_text(json.dumps({"kind": "matroid"}))
    assert run_json(capsys, "check", str(p))[0] == 3
    p.write_text(json.dumps({"kind": "ideals", "ring": {"variables": ["x"]}, "ideals": [["x +* 1"]]}))
    assert run_json(capsys, "check", str(p))[0] == 3


def test_empty_family_zero_checks(capsys, tmp_path):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"kind": "ideals", "ring": {"variables": ["x", "y"]}, "ideals": []}))
    code, rep = run_json(capsys, "check", str(p))
    assert code == 0
    assert rep["instances"][0]["verdicts"] == {}
    assert rep["summary"] == {"pass": 0, "fail": 0, "skipped": 0, "errors": 0}


def test_failing_expectation_exit_1(capsys, tmp_path):
    p = tmp_path / "wrong.json"
    p.write_text(json.dumps({"kind": "ideals", "ring": {"variables": ["x", "y"]},
                             "ideals": [["x^2", "y^2"]], "expected": {"linear_products": True}}))
    code, rep = run_json(capsys, "check", str(p))
    assert code == 1
    assert rep["instances"][0]["verdicts"]["expected:linear_products"]["status"] == "fail"


def test_budget_exhaustion_exit_2(capsys):
    code, rep = run_json(capsys, "check", instance_path("denegri.json"), "--budget", "50")
    assert code == 2
    assert rep["instances"][0]["error"] == "budget"


def test_rees_tally(capsys):
    code, rep = run_json(capsys, "rees", instance_path("denegri.json"), "--bound", "3", "--tally")
    assert code == 0
    assert rep["instances"][0]["payload"]["tally"] == {"0,2": 72, "0,3": 1, "1,1": 22}


def test_betti_square_of_maximal_ideal(capsys):
    code, rep = run_json(capsys, "betti", instance_path("square_max_ideal.json"))
    assert code == 0
    assert rep["instances"][0]["payload"]["linear_resolution"] is True


def test_decompose_northeast(capsys):
    code, rep = run_json(capsys, "decompose", instance_path("ne_n3.json"))
    assert code == 0
    spec = rep["instances"][0]["payload"]["specs"][0]
    assert spec["e"]["1,1"] == 2 and spec["I_equal"] and spec["J_equal"]


def test_sagbi_command(capsys):
    code, rep = run_json(capsys, "sagbi", instance_path("sagbi_symmetric.json"))
    assert code == 0 and rep["summary"]["pass"] == 2


def test_text_output_is_aligned_view(capsys):
    code, out = run(capsys, "decompose", instance_path("ne_n3.json"), "--no-timings")
    assert code == 0
    assert "e11=2" in out and out.rstrip().endswith("0 errors")


def test_field_flag(capsys):
    code, rep = run_json(capsys, "betti", instance_path("square_max_ideal.json"), "--field", "p:32003")
    assert code == 0
    code, _ = run_json(capsys, "betti", instance_path("square_max_ideal.json"), "--field", "p:4")
    assert code == 3


def test_figures_written(capsys, tmp_path):
    out = tmp_path / "figs"
    code, rep = run_json(capsys, "rees", instance_path("notquad.json"), "--tally", "--figures", str(out))
    assert code == 0
    assert rep["figures"] == ["notquad_rees_tally.png"]
    assert (out / "notquad_rees_tally.png").stat().st_size > 0
    _, rep = run_json(capsys, "betti", instance_path("square_max_ideal.json"), "--figures", str(out))
    for f in rep["figures"]:
        assert (out / f).exists()


def test_worker_pool_keeps_input_order(capsys, monkeypatch):
    monkeypatch.setenv("LINPROD_THREADS", "2")
    files = [instance_path("transversal.json"), instance_path("notquad.json")]
    code, rep = run_json(capsys, "check", *files)
    assert code == 0
    assert [e["name"] for e in rep["instances"]] == ["transversal", "notquad"]


def test_load_instance_from_string():
    inst = load_instance('{"kind": "northeast", "n": 3, "S": [[1, 2]]}')
    assert inst.kind == "northeast" and len(inst.specs(Bounds())) == 1
    with pytest.raises(InputError):
        load_instance('{"kind": "northeast", "n": 3, "S": [[4, 4]]}').specs(Bounds())
