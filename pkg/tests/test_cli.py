import json

import pytest
import typer
import yaml
from typer.testing import CliRunner

from cli import app
from commands import verify as verify_commands
from core.codec import dumps
from core.instances import gf4_instance, instance_document
from core.multipoly import BiPoly
from core.runner import run_command

runner = CliRunner()


def invoke(*args):
    return runner.invoke(app, list(args))


def read_json(path):
    with open(path) as f:
        return json.load(f)


@pytest.fixture
def c_one_file(tmp_path):
    params = gf4_instance()
    doc = instance_document(params)
    doc["c"] = params.ring.encode(params.ring.one)
    path = tmp_path / "c_one.yaml"
    path.write_text(yaml.safe_dump(doc))
    return str(path)


def test_verify_passes(tmp_path):
    out = tmp_path / "report.json"
    result = invoke("--quiet", "--out", str(out), "verify", "--instance", "gaussian", "--trials", "12", "--enum-depth", "2")
    assert result.exit_code == 0
    report = read_json(out)
    assert report["overall"] == "pass"
    assert report["instance"] == "gaussian"
    assert len(report["maximality_trials"]) == 12


def test_verify_custom_c_one_fails(c_one_file):
    result = invoke("--quiet", "verify", "--instance", "custom", "--params", c_one_file, "--trials", "5")
    assert result.exit_code == 1


def test_usage_errors_exit_two(tmp_path):
    assert invoke("verify", "--instance", "custom").exit_code == 2
    assert invoke("verify", "--instance", "nope").exit_code == 2
    assert invoke("--precision", "2", "verify").exit_code == 2
    assert invoke("verify", "--trials", "0").exit_code == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert invoke("decide", str(broken)).exit_code == 2


def test_malformed_inputs_exit_two(tmp_path):
    wrong_arity = tmp_path / "wrong_arity.json"
    wrong_arity.write_text(dumps({"terms": [[[1, 0, 2], "w"]]}))
    result = invoke("--quiet", "decide", str(wrong_arity))
    assert result.exit_code == 2
    doc = instance_document(gf4_instance())
    doc["a"] = {"val": 1, "coeffs": ["w"], "precision": 3}
    inexact = tmp_path / "inexact.yaml"
    inexact.write_text(yaml.safe_dump(doc))
    result = invoke("--quiet", "verify", "--instance", "custom", "--params", str(inexact), "--trials", "3")
    assert result.exit_code == 2


def test_unexpected_errors_exit_one():
    def boom():
        raise RuntimeError("unexpected")

    with pytest.raises(typer.Exit) as excinfo:
        run_command(boom)
    assert excinfo.value.exit_code == 1


def test_commands_are_registered_once():
    names = {command.name for command in app.registered_commands}
    assert {"verify", "check-witness", "decide", "remark-sweep", "remark-check"} <= names
    assert not hasattr(verify_commands, "app")


def test_same_seed_gives_identical_reports(tmp_path):
    paths = [tmp_path / f"run{k}.json" for k in range(3)]
    for path, seed in zip(paths, ("7", "7", "8")):
        result = invoke("--quiet", "--seed", seed, "--out", str(path), "verify", "--trials", "15", "--enum-depth", "3")
        assert result.exit_code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_bytes() != paths[2].read_bytes()


def test_decide(tmp_path):
    params = gf4_instance()
    for name, poly, verdict in (
        ("q", params.q_bi, "member"),
        ("y", BiPoly.y(params.ring), "not_member"),
    ):
        src, out = tmp_path / f"{name}.json", tmp_path / f"{name}_out.json"
        src.write_text(dumps(poly.to_json()))
        result = invoke("--quiet", "--out", str(out), "decide", str(src), "--instance", "gf4")
        assert result.exit_code == 0
        data = read_json(out)
        assert data["verdict"] == verdict
        assert data["reverified"] is True


def test_check_witness_round_trip(tmp_path):
    out = tmp_path / "report.json"
    assert invoke("--quiet", "--out", str(out), "verify", "--trials", "10", "--enum-depth", "2").exit_code == 0
    assert invoke("--quiet", "check-witness", str(out)).exit_code == 0

    report = read_json(out)
    trials = report["maximality_trials"]
    other = next(t for t in trials[1:] if t["input"] != trials[0]["input"])
    trials[0]["input"] = other["input"]
    tampered = tmp_path / "tampered.json"
    tampered.write_text(dumps(report))
    assert invoke("--quiet", "check-witness", str(tampered)).exit_code == 1


def test_remark_commands(tmp_path):
    out = tmp_path / "sweep.json"
    result = invoke("--quiet", "--out", str(out), "remark-sweep", "--trials", "30")
    assert result.exit_code == 0
    data = read_json(out)
    assert data["fully_certified"] == 0 and data["trials"] == 30
    result = invoke("--format", "json", "remark-check", "0,-1,0,0", "0,1,0,0", "0,0,1,0")
    assert result.exit_code == 0
    assert '"fails_c"' in result.stdout


def test_docs_commands_json():
    result = invoke("--format", "json", "docs", "commands")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["tool"] == "skewideal-cli"
    names = {cmd["full_name"] for cat in data["categories"] for cmd in cat["commands"]}
    assert {"verify", "decide", "check-witness", "remark-sweep", "remark-check"} <= names
