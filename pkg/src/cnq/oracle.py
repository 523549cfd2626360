"""Dense complex-matrix oracle for the symbolic calculus.

Everything here works on explicit statevectors of 2^n amplitudes and knows
nothing about the exponent calculus: gates are applied as 2x2 complex
matrices under basis-state controls.  ``cross_check`` is the bridge: it
replays a circuit on every basis input and compares the simulated state
with the tensor product predicted by an evaluation report.

Line order is significant: the first declared line is the most significant
bit of the basis index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, Gate
from .errors import (
    BadRootError,
    LineMismatchError,
    SimulationLimitError,
    UnboundVariableError,
    UnknownLineError,
)
from .expr import Assignment, iter_assignments
from .symbolic import EvalReport

# Dense simulation is refused beyond this many lines.
DEFAULT_SIM_GUARD = 12

CROSS_CHECK_ATOL = 1e-9


def q_matrix(k: int, p: int) -> np.ndarray:
    """The 2x2 matrix of Q^p where Q is the k-th root of NOT.

    Q's eigenvectors are those of NOT with eigenvalues 1 and exp(i*pi/k),
    which gives the closed form below.  p may be any integer; p = k yields
    NOT and p = 2k the identity.
    """
    if not isinstance(k, int) or k < 1:
        raise BadRootError(f"root index must be a positive integer, got {k}")
    w = np.exp(1j * np.pi * p / k)
    d = (1 + w) / 2
    o = (1 - w) / 2
    return np.array([[d, o], [o, d]], dtype=np.complex128)


@dataclass(frozen=True)
class StateVector:
    """2^n complex amplitudes over named lines (first line = high bit)."""

    lines: tuple[str, ...]
    amps: np.ndarray

    @classmethod
    def basis(cls, lines: tuple[str, ...], point: Assignment) -> "StateVector":
        n = len(lines)
        idx = 0
        for j, name in enumerate(lines):
            try:
                bit = point[name]
            except KeyError:
                raise UnboundVariableError(f"no input bit for line {name!r}") from None
            idx |= (bit & 1) << (n - 1 - j)
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[idx] = 1.0
        return cls(lines, amps)

    def line_axis(self, name: str) -> int:
        try:
            return self.lines.index(name)
        except ValueError:
            raise UnknownLineError(f"state has no line {name!r}") from None

    def dump(self, eps: float = 1e-12) -> str:
        n = len(self.lines)
        out = []
        for idx, amp in enumerate(self.amps):
            if abs(amp) < eps:
                continue
            bits = format(idx, f"0{n}b")
            out.append(f"|{bits}> {amp.real:+.12f} {amp.imag:+.12f}")
        return "\n".join(out)


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply Q^p on the target axis of every control-satisfying amplitude."""
    n = len(state.lines)
    amps = state.amps.reshape((2,) * n)
    sel: list = [slice(None)] * n
    for c in gate.controls:
        sel[state.line_axis(c)] = 1
    t_ax = state.line_axis(gate.target)
    if not isinstance(sel[t_ax], slice):
        raise UnknownLineError(f"gate targets its own control {gate.target!r}")
    # position of the target axis once the pinned control axes collapse away
    t_pos = t_ax - sum(
        1 for c in gate.controls if state.line_axis(c) < t_ax
    )
    m = q_matrix(gate.k, gate.p)
    sub = amps[tuple(sel)]
    new_sub = np.moveaxis(np.tensordot(m, sub, axes=([1], [t_pos])), 0, t_pos)
    out = amps.copy()
    out[tuple(sel)] = new_sub
    return StateVector(state.lines, out.reshape(-1))


def simulate(
    circuit: Circuit, point: Assignment, *, guard: int = DEFAULT_SIM_GUARD
) -> StateVector:
    """Run the circuit on one basis input and return the final statevector."""
    n = len(circuit.lines)
    if n > guard:
        raise SimulationLimitError(f"{n} lines exceed the simulation guard ({guard})")
    state = StateVector.basis(circuit.line_names, point)
    for g in circuit.gates:
        state = apply_gate(state, g)
    return state


@dataclass
class CrossCheckResult:
    passed: bool
    inputs_checked: int
    witness: dict[str, int] | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        return {
            "verdict": "PASS" if self.passed else "FAIL",
            "inputs_checked": self.inputs_checked,
            "witness": self.witness,
            "detail": self.detail,
        }


def cross_check(
    circuit: Circuit,
    report: EvalReport,
    *,
    guard: int = DEFAULT_SIM_GUARD,
    atol: float = CROSS_CHECK_ATOL,
) -> CrossCheckResult:
    """Compare simulation with a symbolic report on every basis input.

    The report predicts a product state: Boolean lines sit in the basis
    state of their Anf value; residual lines hold Q^E(x) applied to the
    basis state of their base value.  Each amplitude must agree within
    ``atol``.
    """
    names = circuit.line_names
    if set(report.outcomes) != set(names):
        raise LineMismatchError(
            f"report lines {sorted(report.outcomes)} do not match "
            f"circuit lines {sorted(names)}"
        )
    n = len(names)
    if n > guard:
        raise SimulationLimitError(f"{n} lines exceed the simulation guard ({guard})")

    count = 0
    for pt in iter_assignments(names):
        sim = simulate(circuit, pt, guard=guard).amps
        pred = np.ones(1, dtype=np.complex128)
        for name in names:
            oc = report.outcomes[name]
            if oc.value is not None:
                q = np.zeros(2, dtype=np.complex128)
                q[oc.value.evaluate(pt)] = 1.0
            else:
                st = oc.state
                e = st.exponent.evaluate(pt) % (2 * st.k_root)
                q = q_matrix(st.k_root, e)[:, st.base.evaluate(pt)]
            pred = np.kron(pred, q)
        count += 1
        err = float(np.max(np.abs(sim - pred)))
        if err > atol:
            return CrossCheckResult(
                False, count, dict(pt), f"max amplitude error {err:.3e} exceeds {atol:g}"
            )
    return CrossCheckResult(True, count)
