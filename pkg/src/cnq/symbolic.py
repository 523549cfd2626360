"""Symbolic circuit evaluation over the exponent calculus.

Every line starts holding its own input variable.  NOT-family gates on a
Boolean line just XOR the resolved control product into its Anf.  Any other
gate turns the line into a :class:`TargetState`: the line's value is
Q^E(x) applied to a Boolean base, where Q is the K-th root of NOT and E is
a multilinear integer polynomial kept canonical mod 2K.  Because roots of
the same NOT commute, each gate simply adds  p * arith(controls)  into E
after both sides are rebased to a common root (Q_{2K} squared is Q_K, so
moving from root K to K' multiplies exponents by K'/K).

A target state *collapses* back to a Boolean function exactly when every
canonical coefficient of E lies in {0, K}: then E = K * arith(f) pointwise
mod 2K for the Anf ``f`` collecting the coefficient-K monomials, so the
line's value is base XOR f.  Coefficients and values agree here because
the coefficient/value transform is unimodular, making "all values in
{0, K} mod 2K" and "all coefficients in {0, K} mod 2K" equivalent.

Controls must be Boolean: resolving a control on a tainted line first
attempts a collapse and raises ``E_TARGET_INTERACTION`` if none exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .circuit import Circuit
from .errors import LineMismatchError, TargetInteractionError
from .expr import DEFAULT_ENUM_GUARD, Anf, MlPoly, display_anf, iter_assignments


@dataclass(frozen=True)
class TargetState:
    """Q^exponent applied to a Boolean base value (Q the k_root-th root of NOT)."""

    base: Anf
    k_root: int
    exponent: MlPoly

    def rebased(self, k_new: int) -> "TargetState":
        """Express the same state over a finer root: exponents scale by k_new/k_root."""
        if k_new % self.k_root:
            raise ValueError(f"cannot rebase root {self.k_root} onto {k_new}")
        factor = k_new // self.k_root
        return TargetState(
            self.base, k_new, (self.exponent * factor).reduce_mod(2 * k_new)
        )

    def absorb(self, k: int, p: int, control: Anf) -> "TargetState":
        """Add one gate's contribution p * arith(control) at root k."""
        k2 = max(self.k_root, k)
        e = self.exponent * (k2 // self.k_root)
        e = e + (p * (k2 // k)) * control.to_arith()
        return TargetState(self.base, k2, e.reduce_mod(2 * k2))

    def collapse(self) -> Anf | None:
        """The Boolean value of this state, or None if it has none.

        Zero coefficients are never stored, so the {0, K} test reduces to
        "every stored coefficient equals K".
        """
        k = self.k_root
        if any(c != k for c in self.exponent.terms.values()):
            return None
        return self.base ^ Anf(self.exponent.terms.keys())

    def normalized_exponent(self, k_common: int | None = None) -> MlPoly:
        """Exponent with the base folded in: the state is Q^result applied to 0.

        Two states are the same single-qubit function of the inputs iff
        their normalized exponents agree coefficientwise at a common root.
        """
        st = self.rebased(k_common) if k_common else self
        e = st.exponent + st.k_root * st.base.to_arith()
        return e.reduce_mod(2 * st.k_root)

    def __str__(self) -> str:
        return f"root k={self.k_root}, exponent {self.exponent}, base {self.base}"


@dataclass
class LineOutcome:
    """Final value of one line: a Boolean form and/or the exponent state.

    ``status`` is ``pure`` (never left the Boolean domain), ``collapsed``
    (was tainted, holds a Boolean value again) or ``residual`` (still a
    fractional power of NOT; ``value`` is None).  For tainted lines
    ``state`` records the target state at the line's most recent collapse
    attempt, successful or not.
    """

    name: str
    is_target: bool
    status: str
    value: Anf | None
    state: TargetState | None


@dataclass
class GateRecord:
    """Trace entry: how one gate entered the evaluation."""

    index: int
    target: str
    resolved_control: Anf
    absorbed: bool            # True when added into a TargetState exponent
    episode: int | None       # per-line taint episode ordinal when absorbed


@dataclass
class EvalReport:
    circuit: Circuit
    outcomes: dict[str, LineOutcome]
    warnings: list[str] = field(default_factory=list)
    trace: list[GateRecord] | None = None

    def to_dict(self) -> dict:
        lines = {}
        for name, oc in self.outcomes.items():
            entry: dict = {
                "role": "target" if oc.is_target else "control",
                "status": oc.status,
                "value": None if oc.value is None else str(oc.value),
            }
            if oc.state is not None:
                entry["k_root"] = oc.state.k_root
                entry["exponent"] = str(oc.state.exponent)
                entry["base"] = str(oc.state.base)
            lines[name] = entry
        return {"lines": lines, "warnings": list(self.warnings)}

    def to_text(self) -> str:
        out = []
        width = max(len(n) for n in self.outcomes) if self.outcomes else 0
        for name, oc in self.outcomes.items():
            tag = f"{name:<{width}}" + (" [target]" if oc.is_target else " " * 9)
            if oc.status == "pure":
                out.append(f"{tag} : {display_anf(oc.value)}")
            elif oc.status == "collapsed":
                out.append(f"{tag} : {display_anf(oc.value)}")
                out.append(f"{'':<{width}}             collapsed from {oc.state}")
            else:
                out.append(f"{tag} : no Boolean form ({oc.state})")
        for w in self.warnings:
            out.append(f"warning: {w}")
        return "\n".join(out)


def evaluate(circuit: Circuit, *, collect_trace: bool = False) -> EvalReport:
    """Run the circuit symbolically; raises on non-Boolean control use."""
    states: dict[str, Anf | TargetState] = {
        ln.name: Anf.var(ln.name) for ln in circuit.lines
    }
    episode: dict[str, int] = {ln.name: -1 for ln in circuit.lines}
    last_state: dict[str, TargetState] = {}
    trace: list[GateRecord] | None = [] if collect_trace else None

    for i, g in enumerate(circuit.gates):
        ctrl = Anf.one()
        for cname in g.controls:
            s = states[cname]
            if isinstance(s, TargetState):
                v = s.collapse()
                if v is None:
                    raise TargetInteractionError(
                        f"line {cname!r} drives a control while holding a "
                        f"fractional power of NOT ({s})",
                        gate_index=i,
                    )
                last_state[cname] = s
                states[cname] = s = v
            ctrl = ctrl & s

        tstate = states[g.target]
        p = g.p % (2 * g.k)
        if p == g.k and isinstance(tstate, Anf):
            states[g.target] = tstate ^ ctrl
            if trace is not None:
                trace.append(GateRecord(i, g.target, ctrl, False, None))
        else:
            if isinstance(tstate, Anf):
                episode[g.target] += 1
                tstate = TargetState(tstate, g.k, MlPoly.zero())
            states[g.target] = tstate.absorb(g.k, p, ctrl)
            if trace is not None:
                trace.append(GateRecord(i, g.target, ctrl, True, episode[g.target]))

    outcomes: dict[str, LineOutcome] = {}
    warnings: list[str] = []
    for ln in circuit.lines:
        s = states[ln.name]
        if isinstance(s, TargetState):
            last_state[ln.name] = s
            v = s.collapse()
            if v is None:
                warnings.append(
                    f"line {ln.name!r} has no Boolean output form ({s})"
                )
                outcomes[ln.name] = LineOutcome(ln.name, ln.is_target, "residual", None, s)
            else:
                outcomes[ln.name] = LineOutcome(ln.name, ln.is_target, "collapsed", v, s)
        else:
            status = "collapsed" if ln.name in last_state else "pure"
            outcomes[ln.name] = LineOutcome(
                ln.name, ln.is_target, status, s, last_state.get(ln.name)
            )
    return EvalReport(circuit, outcomes, warnings, trace)


@dataclass
class SpecVerdict:
    line: str
    passed: bool
    expected: Anf
    actual_value: Anf | None
    actual_state: TargetState | None
    code: str | None = None            # E_NO_COLLAPSE when no Boolean form exists
    witness: dict[str, int] | None = None

    def to_dict(self) -> dict:
        return {
            "line": self.line,
            "verdict": "PASS" if self.passed else "FAIL",
            "expected": str(self.expected),
            "actual": None if self.actual_value is None else str(self.actual_value),
            "code": self.code,
            "witness": self.witness,
        }


def check_spec(circuit: Circuit, *, guard: int = DEFAULT_ENUM_GUARD) -> list[SpecVerdict]:
    """Compare every spec line against the evaluated output of its line.

    Equality is canonical-form equality of Anfs.  On failure the verdict
    carries the first assignment (counting order over the sorted variable
    union) where the two functions differ, provided the variable count
    stays within ``guard``.
    """
    if not circuit.specs:
        raise ValueError("circuit has no spec lines to check")
    report = evaluate(circuit)
    verdicts = []
    for name in circuit.line_names:
        if name not in circuit.specs:
            continue
        want = circuit.specs[name]
        oc = report.outcomes[name]
        if oc.value is None:
            witness = _non_boolean_witness(oc.state, guard)
            verdicts.append(
                SpecVerdict(name, False, want, None, oc.state, "E_NO_COLLAPSE", witness)
            )
        elif oc.value == want:
            verdicts.append(SpecVerdict(name, True, want, oc.value, oc.state))
        else:
            witness = _first_difference(want, oc.value, guard)
            verdicts.append(
                SpecVerdict(name, False, want, oc.value, oc.state, witness=witness)
            )
    return verdicts


def _first_difference(x: Anf, y: Anf, guard: int) -> dict[str, int] | None:
    vs = sorted(x.variables() | y.variables())
    if len(vs) > guard:
        return None
    for pt in iter_assignments(vs):
        if x.evaluate(pt) != y.evaluate(pt):
            return pt
    return None


def _non_boolean_witness(st: TargetState, guard: int) -> dict[str, int] | None:
    vs = sorted(st.exponent.variables())
    if len(vs) > guard:
        return None
    m = 2 * st.k_root
    for pt in iter_assignments(vs):
        if st.exponent.evaluate(pt) % m not in (0, st.k_root):
            return pt
    return None


@dataclass
class EquivVerdict:
    passed: bool
    details: dict[str, str]     # line name -> "match" or a mismatch description

    def to_dict(self) -> dict:
        return {
            "verdict": "PASS" if self.passed else "FAIL",
            "lines": dict(self.details),
        }


def equivalent(c1: Circuit, c2: Circuit) -> EquivVerdict:
    """Do both circuits compute the same value on every line?

    Boolean outputs compare as Anfs.  Two residual states compare by
    normalized exponent after rebasing to the larger root; coefficientwise
    equality mod 2K decides pointwise equality because only the zero
    polynomial vanishes everywhere mod 2K.  A residual never equals a
    Boolean form (some input leaves it strictly between basis states).
    """
    roles1 = {ln.name: ln.is_target for ln in c1.lines}
    roles2 = {ln.name: ln.is_target for ln in c2.lines}
    if roles1 != roles2:
        raise LineMismatchError(
            f"circuits do not share lines/roles: {sorted(roles1)} vs {sorted(roles2)}"
        )
    r1 = evaluate(c1)
    r2 = evaluate(c2)
    details: dict[str, str] = {}
    ok = True
    for name in c1.line_names:
        o1, o2 = r1.outcomes[name], r2.outcomes[name]
        if o1.value is not None and o2.value is not None:
            if o1.value == o2.value:
                details[name] = "match"
            else:
                details[name] = f"{o1.value} != {o2.value}"
                ok = False
        elif o1.value is None and o2.value is None:
            k = max(o1.state.k_root, o2.state.k_root)
            e1 = o1.state.normalized_exponent(k)
            e2 = o2.state.normalized_exponent(k)
            if e1 == e2:
                details[name] = "match"
            else:
                details[name] = (
                    f"residual states differ at root k={k}: {e1} != {e2}"
                )
                ok = False
        else:
            boolean = o1 if o1.value is not None else o2
            residual = o1 if o1.value is None else o2
            details[name] = (
                f"Boolean form {boolean.value} vs residual ({residual.state})"
            )
            ok = False
    return EquivVerdict(ok, details)
