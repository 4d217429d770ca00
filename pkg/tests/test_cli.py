"""CLI contract: exit codes, JSON schemas, determinism."""

import json

import pytest

from cmsops.cli import main
from cmsops.coeffs import parse_coeff, CoeffFrac

K = CoeffFrac.var("k")
P0 = CoeffFrac.var("p0")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_jack_simple(capsys):
    code, out, _ = run(capsys, "jack", "--partition", "1")
    assert code == 0
    payload = json.loads(out)
    assert parse_coeff(payload["eigenvalue"]) == CoeffFrac.one() + K - K * P0


def test_jack_empty_partition(capsys):
    code, out, _ = run(capsys, "jack", "--partition", "-")
    assert code == 0
    payload = json.loads(out)
    assert payload["eigenvalue"] == "0"
    assert payload["expansion"] == [{"partition": "-", "coefficient": "1"}]


def test_jack_resonance_exit_2(capsys):
    code, _, err = run(capsys, "jack", "--partition", "2", "--bind", "k=1")
    assert code == 2
    assert "resonance" in err


def test_jack_parse_error_exit_3(capsys):
    code, _, _ = run(capsys, "jack", "--partition", "1,2")
    assert code == 3
    code, _, _ = run(capsys, "jack", "--partition", "1", "--bind", "z=1")
    assert code == 3
    code, _, _ = run(capsys, "jack", "--partition", "1", "--bind", "k=0.5x")
    assert code == 3


def test_superjacobi_trivial(capsys):
    code, out, _ = run(capsys, "superjacobi", "--partition", "-", "--m", "1", "--n", "1")
    assert code == 0
    assert json.loads(out)["value"] == "1"


def test_superjacobi_euler_odd(capsys):
    code, out, _ = run(capsys, "superjacobi", "--partition", "1", "--m", "1", "--n", "1",
                       "--euler", "odd")
    assert code == 0
    assert json.loads(out)["value"] == "1 * u1 + -1 * v1"


def test_superjacobi_pole_exit_4(capsys):
    code, _, err = run(capsys, "superjacobi", "--partition", "1", "--m", "1", "--n", "1",
                       "--bind", "k=0")
    assert code == 4
    assert "pole" in err


def test_verify_pass_exit_0(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--m", "1", "--n", "1",
                       "--max-degree", "2", "--format", "text")
    assert code == 0
    assert "passed" in out


def test_verify_negative_control_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--m", "1", "--n", "1",
                       "--max-degree", "2", "--bind", "h=0", "--format", "text")
    assert code == 1
    assert "FAIL" in out


def test_verify_unknown_suite_exit_3(capsys):
    code, _, _ = run(capsys, "verify", "nonsense")
    assert code == 3


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "duality-A", "--max-degree", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "duality-A"
    assert set(payload["summary"]) == {"total", "passed", "failed"}
    for case in payload["cases"]:
        assert set(case) == {"id", "status", "detail"}
        assert case["status"] in ("pass", "fail")


def test_byte_determinism(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "eigen", "--max-degree", "3",
                           "--seed", "42")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]

    jack_outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "jack", "--partition", "2,1")
        assert code == 0
        jack_outs.append(out)
    assert jack_outs[0] == jack_outs[1]


def test_seed_changes_samples(capsys):
    _, out_a, _ = run(capsys, "verify", "eigen", "--max-degree", "2", "--seed", "1")
    _, out_b, _ = run(capsys, "verify", "eigen", "--max-degree", "2", "--seed", "2")
    assert out_a != out_b
