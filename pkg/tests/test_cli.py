from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from a2cocycles.algebra import Braiding
from a2cocycles.cli import main, parse_scalar
from a2cocycles.cocycle import CocycleTable
from a2cocycles.scalar import cyc_root


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_scalar_expressions():
    br = Braiding(3, 1, 1)
    q = br.q
    assert parse_scalar("(q^2-q)/3", br) == (q * q - q) / 3
    assert parse_scalar("-7/2", br) == br.scalar(-3.5)
    assert parse_scalar("1/(1-q)", br) == (1 - q).inverse()
    assert parse_scalar("q^-1", br) == q.inverse()
    br2 = Braiding(3, 2, 2)
    assert parse_scalar("q", br2) == cyc_root(3, 2)
    assert parse_scalar("z", br2) == cyc_root(3, 1)


@pytest.mark.parametrize("bad", ["t+1", "1/(q^3-1)", "q^(1/2)", "2**"])
def test_parse_scalar_rejects(bad):
    from a2cocycles.cli import InputError

    with pytest.raises(InputError):
        parse_scalar(bad, Braiding(3, 1, 1))


def test_table_pair_atypical(capsys):
    code, out, _ = run(capsys, "table", "--lambda", "1,1,1,1,1", "--pair", "0,0,1,0,1,0")
    assert code == 0
    assert json.loads(out)["q_form"] == "1"


def test_table_pair_generic(capsys):
    code, out, _ = run(capsys, "table", "--case", "generic", "--lambda", "2,3,0", "--pair", "1,0,0,0,2,1")
    assert code == 0
    br = Braiding(3, 1, 1)
    q = br.q
    expected = -((1 - q * q) ** 2) * br.q21**3 * 6
    from a2cocycles.scalar import Cyclotomic

    assert Cyclotomic.from_json(json.loads(out)["value"]) == expected


def test_table_json_round_trips(capsys):
    code, out, _ = run(capsys, "table", "--lambda", "1,2,3,4,5")
    assert code == 0
    table = CocycleTable.from_json(json.loads(out))
    assert table((0, 0, 1), (0, 1, 0)) == 4


def test_table_zero_lambda_generic_is_trivial(capsys):
    code, out, _ = run(capsys, "table", "--case", "generic", "--N", "4", "--lambda", "0,0,0", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["a", "b", "value"], ["1", "1", "1"]]


def test_markdown_output(capsys):
    code, out, _ = run(capsys, "table", "--format", "md", "--pair", "1,0,0,2,0,0")
    assert code == 0
    assert out.splitlines()[0] == "| a | b | value |"


def test_output_is_deterministic(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["table", "--lambda", "1/2,q,1,2,3", "-o", str(p1)]) == 0
    assert main(["table", "--lambda", "1/2,q,1,2,3", "-o", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_orbit_with_counit_equals_table(capsys):
    _, table_out, _ = run(capsys, "table", "--format", "csv")
    _, orbit_out, _ = run(capsys, "orbit", "--alpha", "0,0,0,0,0,0,0,0", "--format", "csv")
    assert table_out == orbit_out


def test_exp_single_parameter(capsys):
    code, out, _ = run(capsys, "exp", "--e", "0,1,0,0,0", "--pair", "1,0,0,2,0,0")
    assert code == 0
    assert json.loads(out)["q_form"] == "1"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--lambda", "0,0,0,0,1")
    assert code == 0 and json.loads(out)["verdict"] == "Pure"
    code, out, _ = run(capsys, "classify", "--lambda", "1/3,1/3,(q^2-q)/3,1,1")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "Exponential" and data["witness"]["verified"] is True


def test_section_markdown(capsys):
    code, out, _ = run(capsys, "section", "--format", "md", "--lambda", "0,0,0,1,0")
    assert code == 0
    assert "| x12^2 | y12^2 + (2*q + 1)*y2 |" in out


def test_verify_default_and_generic(capsys):
    code, out, _ = run(capsys, "verify", "--format", "csv")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--case", "generic", "--N", "4", "--format", "csv")
    assert code == 0 and "FAIL" not in out


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"case": "generic", "N": 4, "lambda": ["1", "0", "2"], "format": "csv"}))
    code, out, _ = run(capsys, "table", "--config", str(cfg), "--pair", "0,0,1,1,3,0")
    assert code == 0
    assert out.splitlines()[1] == "x1,x2*x12^3,2"


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--case", "generic", "--N", "4", "--lambda", "0,0,0,1,0"],
        ["table", "--N", "4"],
        ["table", "--lambda", "1,2"],
        ["table", "--pair", "0,0,3,0,0,0"],
        ["orbit", "--alpha", "1,2,3"],
        ["exp", "--case", "generic", "--N", "4"],
        ["classify", "--lambda", "1,1,x,1,1"],
        ["table", "--bogus"],
    ],
)
def test_invalid_input_exits_one(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_bad_config_exits_one(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"colour": "blue"}))
    assert main(["table", "--config", str(cfg)]) == 1
    assert main(["table", "--config", str(tmp_path / "missing.json")]) == 1


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "a2cocycles.cli", "table", "--pair", "0,0,1,0,0,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["q_form"] == "1"


def test_verify_failure_exits_two(capsys, monkeypatch):
    import a2cocycles.cli as cli

    monkeypatch.setattr(cli, "verification_suite", lambda *a, **k: [("coassociativity", True), ("broken", False)])
    code, out, _ = run(capsys, "verify", "--format", "json")
    assert code == 2
    assert json.loads(out)["failed"] == ["broken"]
