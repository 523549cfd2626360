"""Peephole optimization by merging same-control gate contributions.

Gates absorbed into one line's exponent commute with each other, so all
contributions sharing a resolved control expression add up:
Q^p1 Q^p2 ... = Q^(p1+p2+...) mod 2K.  ``merge_pass`` groups the absorbed
gates of each taint episode (one stretch of a line's life between Boolean
phases) by resolved control, sums their rebased powers and rewrites each
multi-gate group as zero gates (sum = 0), one NOT-family gate (sum = K) or
one root-K gate, emitted at the position of the group's last member with
that member's own control lines.  Groups are never merged across a
collapse that another gate observed: the exponent read there must stay
intact.  Single-member groups are left verbatim.

Boolean bookkeeping (NOT-family gates on lines still in Boolean form) is
never touched.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .circuit import Circuit, Gate
from .expr import Anf
from .symbolic import equivalent, evaluate


@dataclass(frozen=True)
class Contribution:
    """One gate's entry in a target exponent."""

    gate_index: int
    target: str
    k: int
    p: int
    resolved_control: Anf
    episode: int


@dataclass
class Change:
    kind: str                      # "cancel" | "promote" | "merge"
    target: str
    gate_indices: list[int]
    replacement: Gate | None
    note: str = ""

    def to_dict(self) -> dict:
        from .circuit import _render_gate

        return {
            "kind": self.kind,
            "target": self.target,
            "gate_indices": list(self.gate_indices),
            "replacement": None if self.replacement is None else _render_gate(self.replacement),
            "note": self.note,
        }


@dataclass
class MergeResult:
    circuit: Circuit
    changes: list[Change]


def merge_pass(circuit: Circuit, *, verify: bool = True) -> MergeResult:
    """One sound merging sweep; never increases the gate count.

    With ``verify`` (the default at this problem scale) the rewritten
    circuit is checked equivalent to the input before being returned.
    """
    report = evaluate(circuit, collect_trace=True)

    contributions: list[Contribution] = []
    for rec in report.trace:
        if not rec.absorbed:
            continue
        g = circuit.gates[rec.index]
        contributions.append(
            Contribution(
                rec.index, rec.target, g.k, g.p % (2 * g.k), rec.resolved_control, rec.episode
            )
        )

    # per-episode root: the maximum k absorbed during that stretch
    episode_k: dict[tuple[str, int], int] = {}
    for con in contributions:
        key = (con.target, con.episode)
        episode_k[key] = max(episode_k.get(key, 1), con.k)

    groups: dict[tuple[str, int, Anf], list[Contribution]] = {}
    for con in contributions:
        groups.setdefault((con.target, con.episode, con.resolved_control), []).append(con)

    drop: set[int] = set()
    emit: dict[int, Gate | None] = {}
    changes: list[Change] = []
    for (target, episode, _ctrl), members in groups.items():
        if len(members) < 2:
            continue
        k_ep = episode_k[(target, episode)]
        total = sum(con.p * (k_ep // con.k) for con in members) % (2 * k_ep)
        last = members[-1]
        indices = [con.gate_index for con in members]
        last_gate = circuit.gates[last.gate_index]
        for idx in indices:
            drop.add(idx)
        if total == 0:
            emit[last.gate_index] = None
            changes.append(
                Change("cancel", target, indices, None, "contributions sum to the identity")
            )
        elif total == k_ep:
            g = Gate.make(1, 1, last_gate.controls, target)
            emit[last.gate_index] = g
            changes.append(
                Change("promote", target, indices, g, "contributions sum to NOT")
            )
        else:
            g = Gate.make(k_ep, total, last_gate.controls, target)
            emit[last.gate_index] = g
            changes.append(Change("merge", target, indices, g))

    new_gates: list[Gate] = []
    for i, g in enumerate(circuit.gates):
        if i in drop:
            if i in emit and emit[i] is not None:
                new_gates.append(emit[i])
            continue
        new_gates.append(g)
    merged = circuit.with_gates(new_gates)

    if verify and changes:
        check = equivalent(circuit, merged)
        if not check.passed:
            raise AssertionError(
                f"merge produced a non-equivalent circuit: {check.details}"
            )
    return MergeResult(merged, changes)


@dataclass
class OptimizationReport:
    before: dict[str, int]
    after: dict[str, int]
    changes: list[Change] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "gate_counts": {"before": dict(self.before), "after": dict(self.after)},
            "changes": [ch.to_dict() for ch in self.changes],
        }

    def to_text(self) -> str:
        out = [
            f"controlled gates: {self.before['total_controlled']} -> "
            f"{self.after['total_controlled']}"
        ]
        for ch in self.changes:
            what = f"gates {ch.gate_indices}"
            if ch.kind == "cancel":
                out.append(f"cancel  {what} on {ch.target}: {ch.note}")
            elif ch.kind == "promote":
                from .circuit import _render_gate

                out.append(f"promote {what} on {ch.target} -> {_render_gate(ch.replacement)}")
            else:
                from .circuit import _render_gate

                out.append(f"merge   {what} on {ch.target} -> {_render_gate(ch.replacement)}")
        if not self.changes:
            out.append("no mergeable gate groups")
        return "\n".join(out)


def optimization_report(
    before: Circuit, after: Circuit, changes: list[Change] | None = None
) -> OptimizationReport:
    return OptimizationReport(before.gate_count(), after.gate_count(), list(changes or ()))
