"""Command-line interface: exit codes, text output, structured output."""

import json

import pytest

from cnq import Circuit
from cnq.cli import main

from conftest import fixture_path

FIG2 = str(fixture_path("fig2"))
FIG5 = str(fixture_path("fig5"))
FIG6 = str(fixture_path("fig6"))
BROKEN = str(fixture_path("broken"))
INTERACTION = str(fixture_path("interaction"))
LONELY = str(fixture_path("lonely_v"))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "structured")
    return code, json.loads(out)


# -- exit codes -------------------------------------------------------------------


def test_verify_pass_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", FIG2)
    assert code == 0
    assert "spec t: PASS" in out
    assert out.strip().endswith("verdict: PASS")


def test_verify_fail_exits_one(capsys):
    code, out, _ = run(capsys, "verify", BROKEN)
    assert code == 1
    assert "first difference at a=0, b=1, c=1, t=0" in out


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "verify", "missing.cnq")[0] == 2
    assert run(capsys, "verify", LONELY)[0] == 2        # no spec lines
    code, _, err = run(capsys, "verify", "missing.cnq")
    assert "E_IO" in err


def test_parse_error_exits_two(capsys, tmp_path):
    bad = tmp_path / "bad.cnq"
    bad.write_text("line a\nfrobnicate a\n")
    code, _, err = run(capsys, "eval", str(bad))
    assert code == 2
    assert "line 2" in err and "E_SYNTAX" in err


def test_target_interaction_exits_three(capsys):
    code, _, err = run(capsys, "eval", INTERACTION)
    assert code == 3
    assert "E_TARGET_INTERACTION" in err


def test_guard_exits_four(capsys):
    code, _, err = run(capsys, "simulate", FIG2, "--guard-sim", "2")
    assert code == 4
    assert "E_TOO_MANY_LINES" in err


def test_bad_subcommand_exits_two(capsys):
    # main traps argparse's SystemExit and forwards the code
    assert main(["frobnicate"]) == 2
    assert "invalid choice" in capsys.readouterr().err


# -- per-command text output ---------------------------------------------------------


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", FIG2)
    assert code == 0
    assert "t [target] : t ^ a&b ^ b&c" in out
    assert "exponent 2*a*b + 2*b*c" in out


def test_eval_warns_on_residual(capsys):
    code, out, _ = run(capsys, "eval", LONELY)
    assert code == 0
    assert "no Boolean form" in out
    assert "warning:" in out


def test_simulate_single_input(capsys):
    code, out, _ = run(capsys, "simulate", FIG2, "--input", "1100")
    assert code == 0
    assert "input |1100>:" in out
    assert "|1101> +1.000000000000" in out


def test_simulate_enumerates_small_circuits(capsys):
    code, out, _ = run(capsys, "simulate", FIG2)
    assert code == 0
    assert out.count("input |") == 16


def test_simulate_bad_input_bits(capsys):
    code, _, err = run(capsys, "simulate", FIG2, "--input", "12")
    assert code == 2
    assert "4 bits" in err


def test_simulate_large_circuit_needs_input(capsys, tmp_path):
    big = tmp_path / "big.cnq"
    big.write_text("".join(f"line x{i}\n" for i in range(9)))
    code, _, err = run(capsys, "simulate", str(big))
    assert code == 2
    assert "--input" in err


def test_check_text(capsys):
    code, out, _ = run(capsys, "check", FIG6)
    assert code == 0
    assert out.strip() == "cross-check: PASS (16 inputs)"


def test_optimize_text_round_trips(capsys):
    code, out, _ = run(capsys, "optimize", FIG2)
    assert code == 0
    assert "controlled gates: 10 -> 9" in out
    body = out.split("\n\n", 1)[1]
    assert Circuit.parse(body).gate_count()["total_controlled"] == 9


def test_equiv_text(capsys):
    code, out, _ = run(capsys, "equiv", FIG2, FIG5)
    assert code == 0
    assert "line t: match" in out

    code, out, _ = run(capsys, "equiv", FIG2, FIG6)
    assert code == 1
    assert "E_LINE_MISMATCH" in out


def test_fuzz_subcommand(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "3", "--count", "10")
    assert code == 0
    assert "10 random circuits" in out


# -- structured output ------------------------------------------------------------------


REQUIRED_KEYS = {"command", "verdict", "lines", "diagnostics", "gate_counts"}


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", FIG2),
        ("verify", FIG2),
        ("simulate", FIG2, "--input", "1100"),
        ("check", FIG2),
        ("optimize", FIG2),
        ("equiv", FIG2, FIG5),
    ],
)
def test_structured_documents_have_required_keys(capsys, argv):
    code, doc = run_json(capsys, *argv)
    assert code == 0
    assert REQUIRED_KEYS <= set(doc)
    assert doc["command"] == argv[0]


def test_structured_verify(capsys):
    _, doc = run_json(capsys, "verify", FIG2)
    assert doc["verdict"] == "PASS"
    assert doc["lines"]["t"]["exponent"] == "2*a*b + 2*b*c"
    assert doc["specs"][0]["verdict"] == "PASS"
    assert doc["gate_counts"]["total_controlled"] == 10


def test_structured_verify_fail_diagnostics(capsys):
    code, doc = run_json(capsys, "verify", BROKEN)
    assert code == 1
    assert doc["verdict"] == "FAIL"
    assert doc["specs"][0]["witness"] == {"a": 0, "b": 1, "c": 1, "t": 0}
    assert any(d["severity"] == "error" for d in doc["diagnostics"])


def test_structured_eval_residual_warning(capsys):
    _, doc = run_json(capsys, "eval", LONELY)
    assert doc["lines"]["t"]["status"] == "residual"
    assert doc["lines"]["t"]["value"] is None
    assert doc["diagnostics"][0]["severity"] == "warning"


def test_structured_simulate(capsys):
    _, doc = run_json(capsys, "simulate", FIG2, "--input", "1100")
    (state,) = doc["states"]
    assert state["input"] == "1100"
    re_im = state["amplitudes"]["1101"]
    assert abs(re_im[0] - 1.0) < 1e-9 and abs(re_im[1]) < 1e-9


def test_structured_check(capsys):
    _, doc = run_json(capsys, "check", FIG2)
    assert doc["cross_check"]["verdict"] == "PASS"
    assert doc["cross_check"]["inputs_checked"] == 16


def test_structured_optimize(capsys):
    _, doc = run_json(capsys, "optimize", FIG2)
    assert doc["gate_counts"]["before"]["total_controlled"] == 10
    assert doc["gate_counts"]["after"]["total_controlled"] == 9
    assert doc["changes"][0]["kind"] == "promote"
    assert Circuit.parse(doc["optimized"]).gate_count()["total_controlled"] == 9


def test_structured_equiv(capsys):
    _, doc = run_json(capsys, "equiv", FIG2, FIG5)
    assert doc["verdict"] == "PASS"
    assert doc["lines"]["t"]["status"] == "match"
    assert doc["gate_counts"]["left"]["total_controlled"] == 10
    assert doc["gate_counts"]["right"]["total_controlled"] == 7


def test_structured_equiv_line_mismatch(capsys):
    code, doc = run_json(capsys, "equiv", FIG2, FIG6)
    assert code == 1
    assert doc["verdict"] == "FAIL"
    assert doc["diagnostics"][0]["code"] == "E_LINE_MISMATCH"
