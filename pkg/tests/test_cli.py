import json

import pytest

from hopfreal import cli
from hopfreal.schemas import COMMANDS, command_schema

jsonschema = pytest.importorskip("jsonschema")


def run(capsys, monkeypatch, argv, payload=None):
    if payload is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


IV_MAP = {"conj": False, "P": [[1, 0, 0.5, 0]], "Q": [[0, 1, 0.5, 0]]}


def test_classify(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["classify"], {"map": IV_MAP})
    assert code == 0 and out == {"class": "IV", "alpha": [0.5, 0.0]}


def test_locus(capsys, monkeypatch):
    payload = {"contraction": {"class": "IIc", "alpha": 0.5, "delta": -0.5}, "structure": {"parity": "even"}}
    code, out = run(capsys, monkeypatch, ["locus"], payload)
    assert code == 0 and out == {"locus": "KleinBottle"}


def test_verify_flows(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["verify", "--suite", "flows", "--seed", "7", "--samples", "200"])
    assert code == 0 and out["pass"] and out["seed"] == 7
    for p in out["suites"][0]["properties"]:
        assert p["max_residual"] < 1e-10 and "tolerance" in p


def test_verify_deterministic(capsys, monkeypatch):
    _, a = run(capsys, monkeypatch, ["verify", "--suite", "picard", "--samples", "20"])
    _, b = run(capsys, monkeypatch, ["verify", "--suite", "picard", "--samples", "20"])
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_verify_failure_exit_code_and_counterexample(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["verify", "--suite", "flows", "--samples", "20", "--tol", "1e-30"])
    assert code == 2 and not out["pass"]
    bad = [p for p in out["suites"][0]["properties"] if not p["pass"]]
    assert bad and all("counterexample" in p and p["tolerance"] == 1e-30 for p in bad)


def test_schema_error_has_pointer(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["existence"], {"contraction": {"class": "IIc", "alpha": "x"}})
    assert code == 1
    assert out["details"][0]["path"] == "/contraction/alpha"


def test_unknown_op(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["flow"], {"op": "nope"})
    assert code == 1 and out["details"][0]["path"] == "/op"


def test_domain_error_exit_1(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["existence"], {"contraction": {"class": "IV", "alpha": 1.5}})
    assert code == 1 and out["type"] == "NotContraction"


def test_in_and_json_out(tmp_path, capsys):
    src = tmp_path / "in.json"
    src.write_text(json.dumps({"contraction": {"class": "IV", "alpha": 0.25}, "k": 2}))
    dst = tmp_path / "out.json"
    assert cli.main(["root", "--in", str(src), "--json-out", str(dst)]) == 0
    printed = json.loads(capsys.readouterr().out)
    assert json.loads(dst.read_text()) == printed
    assert printed["map"]["P"] == [[1, 0, 0.5, 0.0]]


def test_flow_warning(capsys, monkeypatch):
    code, out = run(capsys, monkeypatch, ["flow"], {"contraction": {"class": "IV", "alpha": 0.5}, "t": 100})
    assert code == 0 and out["warnings"]


@pytest.mark.parametrize(
    "command,payload,key",
    [
        ("classify", {"op": "flags", "contraction": {"class": "IV", "alpha": -0.5}}, "negative_diagonal_count"),
        ("classify", {"op": "biholomorphic", "f1": {"class": "IIc", "alpha": 0.3, "delta": 0.4},
                      "f2": {"class": "IIc", "alpha": 0.4, "delta": 0.3}}, "biholomorphic"),
        ("existence", {"contraction": {"class": "IV", "alpha": -0.5}}, "odd_exists"),
        ("existence", {"op": "canonical", "contraction": {"class": "IV", "alpha": 0.25}, "parity": "odd"}, "lift"),
        ("existence", {"op": "family", "contraction": {"class": "IIb", "alpha": 0.5}, "params": {"a": 1, "b": [0, 1]}},
         "instance"),
        ("normalize", {"contraction": {"class": "III", "delta": 0.5, "r": 2},
                       "lift": {"conj": True, "P": [[1, 0, -1, 0], [0, 2, 1, 0]], "Q": [[0, 1, 1, 0]]}}, "psi"),
        ("flow", {"op": "square", "contraction": {"class": "IIa", "delta": -0.5, "r": 2}}, "contraction"),
        ("flow", {"op": "invert", "map": IV_MAP}, "map"),
        ("flow", {"op": "maps_equal", "m1": IV_MAP, "m2": IV_MAP}, "equal"),
        ("chart", {"contraction": {"class": "IV", "alpha": -0.25}, "structure": {"parity": "odd"},
                   "points": [[1, [0, 1]]]}, "equivariance_residual"),
        ("chart", {"op": "sigma", "eta": {"q": 1, "B": 4}, "points": [[0, 1]]}, "points"),
        ("chart", {"op": "big_F_inverse", "contraction": {"class": "IV", "alpha": 0.5}, "points": [[2, 0]]}, "t"),
        ("chart", {"op": "hopf_point", "contraction": {"class": "IIc", "alpha": 0.3, "delta": 0.5},
                   "points": [[1, 1]]}, "representatives"),
        ("quotient", {"contraction": {"class": "IV", "alpha": 0.5}, "structure": {"parity": "even"}}, "space"),
        ("quotient", {"op": "beta", "points": [[0, 1]]}, "points"),
        ("picard", {"parity": "odd", "zeta": 4}, "status"),
        ("picard", {"op": "verify_bundle", "contraction": {"class": "IV", "alpha": 0.25},
                    "structure": {"parity": "odd"}, "zeta": 4, "nu": 2}, "involutive"),
        ("aut", {"contraction": {"class": "IV", "alpha": -0.5}, "structure": {"parity": "odd"}}, "presentation"),
        ("aut", {"op": "canonical_rep", "contraction": {"class": "IV", "alpha": 0.5},
                 "map": {"conj": False, "P": [[1, 0, 2, 0]], "Q": [[0, 1, 2, 0]]}}, "shift"),
        ("aut", {"op": "spinc", "matrix": [[2, 0], [0, 2]], "alpha": -0.5}, "circle_part"),
    ],
)
def test_ops(capsys, monkeypatch, command, payload, key):
    code, out = run(capsys, monkeypatch, [command], payload)
    assert code == 0, out
    assert key in out


def test_print_schema(capsys):
    for command in COMMANDS:
        assert cli.main([command, "--print-schema"]) == 0
        schema = json.loads(capsys.readouterr().out)
        assert schema == json.loads(json.dumps(command_schema(command)))
        for op_schema in schema["ops"].values():
            jsonschema.Draft202012Validator.check_schema(op_schema)
