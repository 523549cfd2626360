"""Merge-pass optimizer: cancellations, promotions, fixed points, soundness."""

import random

import pytest

from cnq import (
    Circuit,
    Gate,
    check_spec,
    equivalent,
    merge_pass,
    optimization_report,
    random_valid_circuit,
)

from conftest import load


def total(c: Circuit) -> int:
    return c.gate_count()["total_controlled"]


# -- the worked examples --------------------------------------------------------


def test_merge_promotes_quarter_turn_pair(fig2):
    result = merge_pass(fig2)
    assert total(result.circuit) == 9
    (change,) = result.changes
    assert change.kind == "promote"
    assert change.gate_indices == [1, 5]
    assert change.replacement == Gate.make(1, 1, ("b",), "t")
    # the merged gate sits where the group's last member was
    assert result.circuit.gates[4] == Gate.make(1, 1, ("b",), "t")


def test_merge_cancels_inverse_pair():
    result = merge_pass(load("fig4_pre"))
    assert total(result.circuit) == 8
    (change,) = result.changes
    assert change.kind == "cancel"
    assert change.replacement is None
    assert result.circuit == load("fig4")


@pytest.mark.parametrize("name", ["fig1", "fig3", "fig4", "fig5", "fig6"])
def test_optimized_networks_are_fixed_points(name):
    c = load(name)
    result = merge_pass(c)
    assert result.changes == []
    assert result.circuit == c


def test_merge_is_idempotent(fig2):
    once = merge_pass(fig2).circuit
    twice = merge_pass(once)
    assert twice.changes == []
    assert twice.circuit == once


def test_merge_preserves_specs_and_verdicts(fig2):
    merged = merge_pass(fig2).circuit
    assert merged.specs == fig2.specs
    (verdict,) = check_spec(merged)
    assert verdict.passed


def test_merge_into_single_root_gate():
    # three quarter-turns under the same control fold into one gate
    c = Circuit.parse("line a\nline t target\nv a -> t\nv a -> t\nv a -> t\n")
    result = merge_pass(c)
    (change,) = result.changes
    assert change.kind == "merge"
    assert result.circuit.gates == (Gate.make(2, 3, ("a",), "t"),)
    assert equivalent(c, result.circuit).passed


def test_merge_respects_episode_boundaries():
    # u reads t between the two pairs, so only gates within one episode merge
    c = Circuit.parse(
        "line a\nline t target\nline u target\n"
        "v a -> t\nv a -> t\n"
        "cnot t u\n"
        "v a -> t\nv a -> t\n"
    )
    result = merge_pass(c)
    kinds = sorted(ch.kind for ch in result.changes)
    assert kinds == ["promote", "promote"]
    groups = sorted(ch.gate_indices for ch in result.changes)
    assert groups == [[0, 1], [3, 4]]
    assert equivalent(c, result.circuit).passed


def test_merge_groups_by_resolved_control():
    # the second gate's control line was rewritten in between; the resolved
    # expressions differ, so nothing merges
    c = Circuit.parse(
        "line a\nline b\nline t target\nv b -> t\ncnot a b\nv b -> t\n"
    )
    result = merge_pass(c)
    assert result.changes == []

    # undoing the rewrite restores a mergeable pair
    c2 = Circuit.parse(
        "line a\nline b\nline t target\n"
        "v b -> t\ncnot a b\ncnot a b\nv b -> t\n"
    )
    result2 = merge_pass(c2)
    assert len(result2.changes) == 1
    assert result2.changes[0].kind == "promote"


def test_mixed_roots_merge_at_the_finer_root():
    # a quarter-turn and an eighth-turn under one control: 2 + 1 eighths
    c = Circuit.parse(
        "line a\nline t target\nv a -> t\nq k=4 p=1 a -> t\n"
    )
    result = merge_pass(c)
    (change,) = result.changes
    assert change.kind == "merge"
    assert result.circuit.gates == (Gate.make(4, 3, ("a",), "t"),)


def test_verify_flag_can_be_disabled(fig2):
    result = merge_pass(fig2, verify=False)
    assert total(result.circuit) == 9


# -- reporting --------------------------------------------------------------------


def test_optimization_report_text(fig2):
    result = merge_pass(fig2)
    report = optimization_report(fig2, result.circuit, result.changes)
    text = report.to_text()
    assert "controlled gates: 10 -> 9" in text
    assert "promote gates [1, 5] on t -> cnot b t" in text


def test_optimization_report_no_changes(fig2):
    c = load("fig5")
    report = optimization_report(c, c, [])
    assert "no mergeable gate groups" in report.to_text()
    doc = report.to_dict()
    assert doc["changes"] == []
    assert doc["gate_counts"]["before"]["total_controlled"] == 7


def test_change_to_dict(fig2):
    (change,) = merge_pass(fig2).changes
    doc = change.to_dict()
    assert doc == {
        "kind": "promote",
        "target": "t",
        "gate_indices": [1, 5],
        "replacement": "cnot b t",
        "note": "contributions sum to NOT",
    }


# -- randomized soundness ------------------------------------------------------------


@pytest.mark.parametrize("seed", range(4))
def test_merge_sound_on_random_circuits(seed):
    rng = random.Random(seed)
    for _ in range(50):
        c = random_valid_circuit(rng, max_lines=4, max_gates=12)
        result = merge_pass(c)           # verify=True asserts equivalence
        assert total(result.circuit) <= total(c)
        again = merge_pass(result.circuit)
        assert again.circuit == result.circuit
