import json

import pytest

from tatemassey import cli


def run(capsys, *args):
    code = cli.main(list(args))
    return code, capsys.readouterr()


def test_gamma_text(capsys):
    code, out = run(capsys, "check-gamma", "--t", "4")
    assert code == 0 and out.out.strip() == "gamma: nontrivial (certificate)"


def test_module_random_seed(capsys):
    code, out = run(capsys, "check-module", "--t", "4", "--seed", "1")
    assert code == 0 and out.out.strip() == "summand_of_realizable: true"


def test_module_from_file(capsys, tmp_path):
    path = tmp_path / "A.json"
    path.write_text(json.dumps({"rows": [0, 0], "cols": [-1, -1], "entries": [["y", "x+y"], ["x", "y"]]}))
    code, out = run(capsys, "check-module", "--t", "2", "--matrix", str(path), "--format", "json")
    report = json.loads(out.out)
    assert code == 0 and report["schema"] == 1
    assert report["checks"][0]["data"]["summand_of_realizable"] is False
    assert report["checks"][0]["data"]["verdict"]["in_indeterminacy"] is False


@pytest.mark.parametrize("payload", ['{"rows": [0]}', "not json",
                                     '{"rows": [0], "cols": [0], "entries": [["x"]]}'])
def test_malformed_matrix(capsys, tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(payload)
    code, out = run(capsys, "check-module", "--matrix", str(path))
    assert code == 2 and "error" in out.err


def test_bad_configurations(capsys):
    assert run(capsys, "verify-group", "--t", "6")[0] == 2
    assert run(capsys, "check-module", "--t", "2", "--kind", "m~")[0] == 2
    with pytest.raises(SystemExit):
        cli.main(["no-such-command"])


def test_verify_commands(capsys):
    for cmd in ("verify-group", "verify-resolution", "verify-f2"):
        assert run(capsys, cmd, "--t", "8")[0] == 0
    code, out = run(capsys, "verify-homotopies", "--t", "4")
    assert code == 0 and "homotopies: PASS" in out.out


def test_dump_m_json(capsys):
    code, out = run(capsys, "dump-m", "--t", "4", "--format", "json")
    values = json.loads(out.out)["checks"][0]["data"]["values"]
    assert values["x,y,x"] == "x^2" and values["s,x,y"] == "s*x"
    assert len(values) == 2 * 6 ** 3


def test_enumerate_json_is_deterministic(capsys):
    first = run(capsys, "enumerate-massey", "--t", "2", "--window", "3", "--format", "json")
    second = run(capsys, "enumerate-massey", "--t", "2", "--window", "3", "--format", "json")
    assert first[0] == 0 and first[1].out == second[1].out
