"""Golden-file and contract tests for the command-line front end."""

import io
import json
import sys
from pathlib import Path

import jsonschema
import pytest

from k3moduli.cli import _COMMANDS, main

FIXTURES = Path(__file__).parent / "fixtures"
SCHEMAS = Path(__file__).parent.parent / "schemas"

# schema validating each subcommand's OUTPUT document (None: bare scalar)
OUTPUT_SCHEMA = {
    "twist": "mukai_vector",
    "chern": "chern",
    "untwist": None,
    "brauer-equiv": None,
    "twist-square": "isometry",
    "walls-between": "walls_output",
    "moduli": "moduli_report",
    "beauville": "lattice",
    "algebraic-beauville": "lattice",
    "complement": "matrix",
    "lattice": "lattice",
    "compose": "isometry",
}


def run_cli(argv):
    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main(argv)
    finally:
        sys.stdout = old
    return code, buf.getvalue()


def load_schema(name):
    with open(SCHEMAS / f"{name}.schema.json", "r", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.mark.parametrize("command", sorted(_COMMANDS))
def test_golden_output(command):
    fixture = FIXTURES / f"{command}.json"
    expected = (FIXTURES / f"{command}.expected").read_text()
    code, out = run_cli([command, str(fixture)])
    assert code == 0
    assert out == expected


@pytest.mark.parametrize("command", sorted(_COMMANDS))
def test_byte_identical_across_runs(command):
    fixture = FIXTURES / f"{command}.json"
    first = run_cli([command, str(fixture)])
    second = run_cli([command, str(fixture)])
    assert first == second


@pytest.mark.parametrize("command,schema", sorted(
    (c, s) for c, s in OUTPUT_SCHEMA.items() if s and s != "chern"))
def test_output_matches_schema(command, schema):
    _, out = run_cli([command, str(FIXTURES / f"{command}.json")])
    jsonschema.validate(json.loads(out), load_schema(schema))


def test_mukai_vector_outputs_match_schema():
    schema = load_schema("mukai_vector")
    for command in ("twist", "chern", "primitive", "untwist"):
        _, out = run_cli([command, str(FIXTURES / f"{command}.json")])
        doc = json.loads(out)
        if command == "primitive":
            doc = doc["v0"]
        elif command == "untwist":
            doc = doc["D"]
        jsonschema.validate(doc, schema)


def test_stdin_input(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(
        (FIXTURES / "pairing.json").read_text()))
    code, out = run_cli(["pairing", "-"])
    assert code == 0
    assert out == '"2"\n'


def test_pretty_flag():
    code, out = run_cli(["moduli", str(FIXTURES / "moduli.json"), "--pretty"])
    assert code == 0
    assert "\n  " in out
    compact = run_cli(["moduli", str(FIXTURES / "moduli.json")])[1]
    assert json.loads(out) == json.loads(compact)


def test_surface_flag():
    code, out = run_cli(["chern", str(FIXTURES / "chern.json"),
                         "--surface", "abelian"])
    assert code == 0
    assert json.loads(out)["s"] == "0"


def test_malformed_json_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run_cli(["pairing", str(bad)])
    assert code == 2
    doc = json.loads(out)
    assert doc["error"]["code"] == "validation"
    jsonschema.validate(doc, load_schema("error"))


def test_missing_field_exits_2(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text('{"v": {"r": 1, "c": [], "s": 0}}')
    code, out = run_cli(["pairing", str(doc)])
    assert code == 2
    assert json.loads(out)["error"]["code"] == "validation"


def test_float_input_exits_2(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text('{"ns": {"gram": [[2]]}, '
                   '"v": {"r": 1, "c": [0.5], "s": 0}, '
                   '"w": {"r": 1, "c": [0], "s": 0}}')
    code, out = run_cli(["pairing", str(doc)])
    assert code == 2


def test_precondition_exits_3(tmp_path):
    doc = tmp_path / "doc.json"
    # non-primitive vector: the moduli report refuses it
    doc.write_text(json.dumps({
        "ns": {"ambient": "K3", "basis": [[1, 1] + [0] * 20]},
        "b": {"xi": [0] * 22, "r": 1},
        "v": {"r": 2, "c": ["0"] * 22, "s": "-2"},
        "H": [1],
    }))
    code, out = run_cli(["moduli", str(doc)])
    assert code == 3
    parsed = json.loads(out)
    assert parsed["error"]["code"] == "precondition"
    assert "primitive" in parsed["error"]["message"]
    jsonschema.validate(parsed, load_schema("error"))


def test_non_general_polarization_named(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text(json.dumps({
        "ns": {"ambient": "K3",
               "basis": [[1, 1] + [0] * 20, [0, 0, 1, -1] + [0] * 18]},
        "b": {"xi": [0] * 22, "r": 1},
        "v": {"r": 2, "c": ["0"] * 22, "s": "-1"},
        "H": [1, 0],
    }))
    code, out = run_cli(["moduli", str(doc)])
    assert code == 3
    assert "general" in json.loads(out)["error"]["message"]


def test_indefinite_gram_exits_3(tmp_path):
    doc = tmp_path / "doc.json"
    doc.write_text('{"gram": [[0, 1], [1, 0]], "vectors": [[1, 0]]}')
    code, _ = run_cli(["complement", str(doc)])
    assert code == 0  # complements are fine on indefinite forms
    doc.write_text('{"gram": [[0]]}')
    code, out = run_cli(["discriminant", str(doc)])
    assert code == 3


def test_every_command_has_fixture():
    for command in _COMMANDS:
        assert (FIXTURES / f"{command}.json").exists(), command
        assert (FIXTURES / f"{command}.expected").exists(), command
