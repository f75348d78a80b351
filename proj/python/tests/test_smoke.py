import json
import os
import pathlib

import pytest

import gradalg

FIXTURES = pathlib.Path(os.environ.get("GRADALG_FIXTURES", pathlib.Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_scalar_literals():
    assert gradalg.scalar("4/6") == "2/3"
    assert gradalg.scalar("-z4") == "z4^3"
    assert gradalg.scalar({"N": 3, "num": [1, 1], "den": 1}) == "z6^1"
    assert gradalg.scalar("z2") == -1
    assert gradalg.scalar(7) == 7
    with pytest.raises(gradalg.SchemaError):
        gradalg.scalar("z8", max_root_order=4)
    with pytest.raises(gradalg.SchemaError):
        gradalg.scalar("1/0")


def test_commands_listed():
    cmds = gradalg.commands()
    assert "interchange" in cmds and "obstruction" in cmds
    assert gradalg.is_query("obstruction")
    assert not gradalg.is_query("check-algebra")


def test_obstruction_dichotomy():
    report, code = gradalg.run("obstruction", load("z2_psi_minus.json"))
    assert code == 0
    assert all(not t["exists"] for t in report["tasks"].values())
    report, code = gradalg.run("obstruction", load("z2_psi_plus.json"))
    assert code == 0 and all(t["exists"] for t in report["tasks"].values())


def test_super_interchange_witness():
    report, code = gradalg.run("interchange", load("super.json"))
    assert code == 0 and report["ok"]
    (task,) = report["tasks"].values()
    assert task["checked"] == 64 and task["exhaustive"]
    assert task["witness"]["untwisted_failures"] > 0


def test_monoidal_monad_verdicts():
    _, code = gradalg.run("monoidal-monad", load("commutative.json"))
    assert code == 0
    report, code = gradalg.run("monoidal-monad", load("super.json"))
    assert code == 1 and not report["ok"]


def test_schema_error_carries_pointer():
    ws = load("z2_tga.json")
    del ws["version"]
    with pytest.raises(gradalg.SchemaError) as e:
        gradalg.run("check-algebra", ws)
    assert "/version" in str(e.value) or "version" in str(e.value)


def test_cli_in_process_matches_run(tmp_path):
    path = FIXTURES / "klein.json"
    code, out, err = gradalg.cli("cohomologous", str(path))
    assert code == 0 and err == ""
    report, _ = gradalg.run("cohomologous", load("klein.json"))
    assert json.loads(out) == report
    code, _, err = gradalg.cli("check-algebra", str(tmp_path / "missing.json"))
    assert code == 2 and err
