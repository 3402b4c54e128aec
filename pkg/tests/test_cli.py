import json
import subprocess
import sys

import pytest

from lkobstruct.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_slope_word_text(capsys):
    code, out, _ = run(capsys, "slope-word", "--slope", "2/1")
    assert code == 0
    assert "omega   : v" in out
    assert "relator : u v u^-1 v^-1" in out


def test_slope_word_oracle_10_7(capsys):
    code, d = run_json(capsys, "slope-word", "--slope", "10/7", "--oracle")
    assert code == 0
    assert d["epsilon"] == "+-++-++-+"
    assert d["oracle"]["signs"] == "+-++-++-+"
    assert d["oracle"]["full_agreement"]
    assert d["oracle"]["printed_signs"] == "+-++-+-++"
    assert d["oracle"]["oracle_supports"] == "formula"
    code, out, _ = run(capsys, "slope-word", "--slope", "10/7", "--oracle")
    assert "WARN" in out and "v u^-1 v u v^-1 u v^-1 u v" in out


@pytest.mark.parametrize("argv,msg", [
    (["slope-word", "--slope", "3/2"], "numerator must be even"),
    (["slope-word", "--slope", "4/6"], "coprime"),
    (["obstruct", "--pq", "4,2", "--slope", "2/1"], "p,q must be coprime"),
    (["obstruct", "--pq", "3,1", "--slope", "2/1"], "p > q > 1"),
    (["kernels", "--k1", "-1", "--k2", "0"], "nonnegative"),
    (["satellite", "--w", "0"], "nonzero"),
    (["blanchfield", "--x", "1,2,3", "--y", "0,1"], "coordinates"),
])
def test_validation_exit_2(capsys, argv, msg):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert msg in err
    assert out == ""


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["obstruct", "--slope", "2/1"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["--parallelism", "0", "slope-word", "--slope", "2/1"])
    assert e.value.code == 2


def test_obstruct(capsys):
    code, d = run_json(capsys, "obstruct", "--pq", "3,2", "--slope", "2/1")
    assert code == 0
    assert d["nontrivial"] is True and d["syllables"] == 4 and d["normal_form"] == "x^2 y x y"
    assert (d["a"], d["b"]) == (1, -1)
    code, d = run_json(capsys, "obstruct", "--pq", "3,2", "--slope", "0/1")
    assert code == 0 and d["nontrivial"] is False and d["syllables"] == 0


def test_obstruct_both_conventions_and_compare(capsys):
    code, d = run_json(capsys, "obstruct", "--pq", "7,5", "--slope", "6/5", "--convention", "both")
    assert code == 0
    a, b = d["reports"]
    assert (a["convention"], b["convention"]) == ("proof", "presentation")
    assert a["syllables"] == b["syllables"] == 12
    code, d = run_json(capsys, "obstruct", "--pq", "3,2", "--slope", "2/1", "--compare", "2/3")
    assert d["certificate"]["requires_external_diffeomorphism"] is True
    assert d["report"]["syllables"] == 4


def test_kernels(capsys):
    code, d = run_json(capsys, "kernels", "--k1", "0", "--k2", "1")
    assert code == 0 and d["kernels"] == "distinct"
    assert d["difference"] == "(0, (4t-5)/7)"
    assert d["c2_cd_d2"] == "3/7"
    code, out, _ = run(capsys, "kernels", "--k1", "5", "--k2", "5")
    assert code == 0 and "P_5 = P_5" in out
    code, d = run_json(capsys, "kernels", "--k1", "0", "--k2", "100")
    assert d["kernels"] == "distinct"


def test_blanchfield(capsys):
    code, d = run_json(capsys, "blanchfield", "--x", "0,1", "--y", "0,1")
    assert code == 0 and d["value"] == "t / (t^2 - t + 1)"
    code, d = run_json(capsys, "blanchfield", "--x", "1,0", "--y", "0,t")
    assert d["zero"] is True
    code, d = run_json(capsys, "blanchfield", "--x", "1,0,0,0", "--y", "1,0,0,0")
    assert d["value"] == "-1*t / (t^2 - t + 1)"


def test_satellite(capsys):
    code, d = run_json(capsys, "satellite", "--pattern", "trefoil", "--companion", "trefoil", "--w", "2")
    assert code == 0 and d["consistent"]
    assert d["presentation"][2] == ["0", "0", "-1 + t^2", "1"]
    assert d["order_ideal"] == "1 - t + t^3 - t^5 + t^6"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "--format", "json", "--out", str(path), "kernels", "--k1", "1", "--k2", "2")
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["k1"] == 1


def test_subcommand_level_flags(capsys):
    code, out, _ = run(capsys, "kernels", "--k1", "1", "--k2", "2", "--format", "json")
    assert json.loads(out)["k2"] == 2


def test_json_deterministic(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "--format", "json", "obstruct", "--pq", "5,3", "--slope=-8/7",
                           "--convention", "both", "--compare", "0/1")
        outs.append(out)
    assert outs[0] == outs[1]


def test_verify_all_reduced(capsys):
    code, d = run_json(capsys, "verify-all", "--sweep-cmax", "4", "--sweep-pmax", "5", "--kmax", "10")
    assert code == 0
    status = {r["id"]: r["status"] for r in d["results"]}
    assert status["2w"] == "WARN"
    assert all(s == "PASS" for k, s in status.items() if k != "2w")
    assert d["results"][4]["details"]["pq"] == [[3, 2], [5, 2], [5, 3]]


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "lkobstruct", "slope-word", "--slope", "3/2"],
                       capture_output=True, text=True)
    assert r.returncode == 2 and "numerator must be even" in r.stderr
