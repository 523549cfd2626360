"""Circuit model and the ``.cnq`` text format.

A circuit is an ordered list of named lines, an ordered list of gates and
optional per-line output specifications.  Every gate applies Q^p to its
target when all controls are 1, where Q is the k-th root of NOT:
Q^k = NOT and Q^(2k) = I, with k a power of two.  The NOT family is the
special case p = k; it is stored with k=1, p=1 when written with the
``not``/``cnot``/``ccx`` sugar.

Statement forms (one per line, ``#`` starts a comment)::

    line <id> [target]
    not <line>
    cnot <ctrl> <line>
    ccx <c1> <c2> ... <line>
    v  <c1> [<c2> ...] -> <line>      # k=2, p=1     (square root of NOT)
    v* <c1> [<c2> ...] -> <line>      # k=2, p=-1
    w  <c1> [<c2> ...] -> <line>      # k=4, p=1     (fourth root of NOT)
    w* <c1> [<c2> ...] -> <line>      # k=4, p=-1
    q k=<K> p=<P> [<c1> ...] -> <line>
    spec <target> = <anf-expr>

Powers are canonicalized into 0 < p < 2k; p = 0 mod 2k is rejected as the
identity.  Control expressions in ``spec`` use the Anf grammar
(``^`` for XOR, ``&`` for AND, constants ``0``/``1``, parentheses).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from collections.abc import Iterable, Mapping

from .errors import (
    BadRootError,
    ParseError,
    SelfControlError,
    UndeclaredLineError,
    ZeroPowerError,
)
from .expr import Anf, _VAR_RE

_SUGAR = {"v": (2, 1), "v*": (2, 3), "w": (4, 1), "w*": (4, 7)}
_SUGAR_BY_KP = {kp: name for name, kp in _SUGAR.items()}


def _is_power_of_two(k: int) -> bool:
    return isinstance(k, int) and k >= 1 and (k & (k - 1)) == 0


@dataclass(frozen=True)
class Line:
    name: str
    is_target: bool = False

    @property
    def role(self) -> str:
        return "target" if self.is_target else "control"


@dataclass(frozen=True)
class Gate:
    """Q^p on ``target`` under the conjunction of ``controls`` (k-th root Q)."""

    k: int
    p: int
    controls: tuple[str, ...] = ()
    target: str = ""

    @classmethod
    def make(
        cls,
        k: int,
        p: int,
        controls: Iterable[str],
        target: str,
    ) -> "Gate":
        """Checked constructor: canonicalizes p and enforces gate invariants."""
        if not _is_power_of_two(k):
            raise BadRootError(f"root index must be a positive power of two, got {k}")
        p_c = p % (2 * k)
        if p_c == 0:
            raise ZeroPowerError(f"power {p} is 0 mod {2 * k}: the identity gate")
        ctrls = tuple(controls)
        if len(set(ctrls)) != len(ctrls):
            raise ParseError(f"duplicate control on gate targeting {target!r}")
        if target in ctrls:
            raise SelfControlError(f"line {target!r} controls its own gate")
        return cls(k, p_c, ctrls, target)

    @property
    def is_not_family(self) -> bool:
        return self.p % (2 * self.k) == self.k


@dataclass(frozen=True, eq=True)
class Circuit:
    lines: tuple[Line, ...] = ()
    gates: tuple[Gate, ...] = ()
    specs: Mapping[str, Anf] = field(default_factory=dict)

    # -- access helpers ------------------------------------------------------

    @property
    def line_names(self) -> tuple[str, ...]:
        return tuple(ln.name for ln in self.lines)

    def line(self, name: str) -> Line:
        for ln in self.lines:
            if ln.name == name:
                return ln
        raise UndeclaredLineError(f"no line named {name!r}")

    def target_names(self) -> tuple[str, ...]:
        return tuple(ln.name for ln in self.lines if ln.is_target)

    def with_gates(self, gates: Iterable[Gate]) -> "Circuit":
        return replace(self, gates=tuple(gates))

    # -- text format ----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Circuit":
        return _parse_circuit(text)

    def __str__(self) -> str:
        out = []
        for ln in self.lines:
            out.append(f"line {ln.name} target" if ln.is_target else f"line {ln.name}")
        for g in self.gates:
            out.append(_render_gate(g))
        for ln in self.lines:
            if ln.name in self.specs:
                out.append(f"spec {ln.name} = {self.specs[ln.name]}")
        return "\n".join(out) + "\n"

    # -- checks ---------------------------------------------------------------

    def validate(self) -> "list[Diagnostic]":
        return _validate(self)

    def gate_count(self) -> dict[str, int]:
        return _gate_count(self)


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    gate_index: int | None = None

    def __str__(self) -> str:
        where = f" (gate {self.gate_index})" if self.gate_index is not None else ""
        return f"{self.code}: {self.message}{where}"


def _render_gate(g: Gate) -> str:
    if g.k == 1 and g.p == 1:
        if not g.controls:
            return f"not {g.target}"
        if len(g.controls) == 1:
            return f"cnot {g.controls[0]} {g.target}"
        return "ccx " + " ".join(g.controls) + f" {g.target}"
    name = _SUGAR_BY_KP.get((g.k, g.p))
    if name is not None and g.controls:
        return f"{name} " + " ".join(g.controls) + f" -> {g.target}"
    ctrl = (" ".join(g.controls) + " ") if g.controls else ""
    return f"q k={g.k} p={g.p} {ctrl}-> {g.target}"


# -- parser -------------------------------------------------------------------


def _tokenize(body: str) -> list[tuple[str, int]]:
    """Whitespace-split tokens with 1-based columns; '->' splits off neighbours."""
    out: list[tuple[str, int]] = []
    col = 0
    for raw in body.split():
        col = body.index(raw, col)
        piece, at = raw, col
        while "->" in piece:
            j = piece.index("->")
            if j:
                out.append((piece[:j], at + 1))
            out.append(("->", at + j + 1))
            piece, at = piece[j + 2 :], at + j + 2
        if piece:
            out.append((piece, at + 1))
        col += len(raw)
    return out


def _parse_circuit(text: str) -> Circuit:
    lines: list[Line] = []
    declared: set[str] = set()
    targets: set[str] = set()
    gates: list[Gate] = []
    specs: dict[str, Anf] = {}

    def need_declared(name: str, lineno: int, col: int) -> None:
        if name not in declared:
            raise UndeclaredLineError(
                f"line {name!r} used before declaration", line=lineno, col=col
            )

    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        toks = _tokenize(body)
        head, hcol = toks[0]

        try:
            if head == "line":
                if len(toks) < 2 or len(toks) > 3:
                    raise ParseError("expected: line <id> [target]", line=lineno, col=hcol)
                name, ncol = toks[1]
                if not _VAR_RE.match(name):
                    raise ParseError(f"invalid line name {name!r}", line=lineno, col=ncol)
                if name in declared:
                    raise ParseError(f"line {name!r} already declared", line=lineno, col=ncol)
                is_target = False
                if len(toks) == 3:
                    role, rcol = toks[2]
                    if role != "target":
                        raise ParseError(
                            f"expected 'target' or end of line, got {role!r}",
                            line=lineno,
                            col=rcol,
                        )
                    is_target = True
                declared.add(name)
                if is_target:
                    targets.add(name)
                lines.append(Line(name, is_target))

            elif head == "spec":
                eq = body.find("=")
                if eq < 0:
                    raise ParseError("expected: spec <target> = <expr>", line=lineno, col=hcol)
                left = _tokenize(body[:eq])
                if len(left) != 2:
                    raise ParseError("expected: spec <target> = <expr>", line=lineno, col=hcol)
                name, ncol = left[1]
                need_declared(name, lineno, ncol)
                if name not in targets:
                    raise ParseError(
                        f"spec refers to non-target line {name!r}", line=lineno, col=ncol
                    )
                if name in specs:
                    raise ParseError(f"duplicate spec for line {name!r}", line=lineno, col=ncol)
                from .expr import _ExprParser

                expr = _ExprParser(body[eq + 1 :], col_offset=eq + 1).run_anf()
                for v in sorted(expr.variables()):
                    need_declared(v, lineno, eq + 2)
                specs[name] = expr

            elif head in ("not", "cnot", "ccx"):
                args = toks[1:]
                min_args = {"not": 1, "cnot": 2, "ccx": 2}[head]
                if len(args) < min_args or (head != "ccx" and len(args) != min_args):
                    raise ParseError(f"malformed {head} statement", line=lineno, col=hcol)
                for name, ncol in args:
                    need_declared(name, lineno, ncol)
                *ctrls, (tname, _) = args
                gates.append(Gate.make(1, 1, (c for c, _ in ctrls), tname))

            elif head in _SUGAR or head == "q":
                arrow = next((i for i, (t, _) in enumerate(toks) if t == "->"), None)
                if arrow is None or arrow != len(toks) - 2:
                    raise ParseError(
                        "expected: ... -> <line> with exactly one target", line=lineno, col=hcol
                    )
                params = toks[1:arrow]
                tname, tcol = toks[-1]
                if head == "q":
                    if (
                        len(params) < 2
                        or not params[0][0].startswith("k=")
                        or not params[1][0].startswith("p=")
                    ):
                        raise ParseError(
                            "expected: q k=<int> p=<int> [controls] -> <line>",
                            line=lineno,
                            col=hcol,
                        )
                    try:
                        k = int(params[0][0][2:])
                    except ValueError:
                        raise ParseError(
                            f"bad root index {params[0][0][2:]!r}", line=lineno, col=params[0][1]
                        ) from None
                    try:
                        p = int(params[1][0][2:])
                    except ValueError:
                        raise ParseError(
                            f"bad power {params[1][0][2:]!r}", line=lineno, col=params[1][1]
                        ) from None
                    ctrl_toks = params[2:]
                else:
                    k, p = _SUGAR[head]
                    ctrl_toks = params
                for name, ncol in ctrl_toks:
                    need_declared(name, lineno, ncol)
                need_declared(tname, lineno, tcol)
                gates.append(Gate.make(k, p, (c for c, _ in ctrl_toks), tname))

            else:
                raise ParseError(f"unknown statement {head!r}", line=lineno, col=hcol)

        except (BadRootError, ZeroPowerError, SelfControlError, ParseError) as exc:
            if exc.line is None:
                exc.line = lineno
                exc.args = (exc.describe(),)
            raise

    if not lines:
        raise ParseError("circuit declares no lines", line=1, col=1)
    return Circuit(tuple(lines), tuple(gates), specs)


# -- validation ----------------------------------------------------------------


def _validate(c: Circuit) -> list[Diagnostic]:
    diags: list[Diagnostic] = []
    seen: set[str] = set()
    for ln in c.lines:
        if ln.name in seen:
            diags.append(Diagnostic("E_SYNTAX", f"line {ln.name!r} declared twice"))
        seen.add(ln.name)
    if not c.lines:
        diags.append(Diagnostic("E_SYNTAX", "circuit declares no lines"))
    targets = {ln.name for ln in c.lines if ln.is_target}

    for i, g in enumerate(c.gates):
        if not _is_power_of_two(g.k):
            diags.append(
                Diagnostic("E_BAD_K", f"root index {g.k} is not a positive power of two", i)
            )
            continue
        if g.p % (2 * g.k) == 0:
            diags.append(Diagnostic("E_ZERO_POWER", f"power {g.p} is 0 mod {2 * g.k}", i))
        if g.target not in seen:
            diags.append(Diagnostic("E_UNDECLARED_LINE", f"unknown target {g.target!r}", i))
        for ctrl in g.controls:
            if ctrl not in seen:
                diags.append(Diagnostic("E_UNDECLARED_LINE", f"unknown control {ctrl!r}", i))
        if g.target in g.controls:
            diags.append(
                Diagnostic("E_SELF_CONTROL", f"line {g.target!r} controls its own gate", i)
            )
        if len(set(g.controls)) != len(g.controls):
            diags.append(Diagnostic("E_SYNTAX", f"duplicate control on gate {i}", i))

    for name, expr in c.specs.items():
        if name not in seen:
            diags.append(Diagnostic("E_UNDECLARED_LINE", f"spec for unknown line {name!r}"))
        elif name not in targets:
            diags.append(Diagnostic("E_SYNTAX", f"spec for non-target line {name!r}"))
        for v in sorted(expr.variables()):
            if v not in seen:
                diags.append(
                    Diagnostic("E_UNDECLARED_LINE", f"spec for {name!r} uses unknown line {v!r}")
                )
    return diags


# -- gate census ----------------------------------------------------------------


def _gate_count(c: Circuit) -> dict[str, int]:
    """Per-category gate counts plus controlled-gate totals.

    ``total_controlled`` counts every gate with at least one control once,
    whatever its root; uncontrolled NOTs sit in their own ``not`` bucket.
    ``total_on_targets`` restricts the count to gates acting on target-role
    lines, and ``control_forming_cnots`` counts NOT-family gates that only
    rewrite control-role lines (forming/unforming control expressions), so
    both readings of the controlled-gate total are available.
    """
    counts: dict[str, int] = {}
    targets = {ln.name for ln in c.lines if ln.is_target}
    total_controlled = on_targets = forming = 0
    for g in c.gates:
        p = g.p % (2 * g.k)
        if p == g.k:
            key = "not" if not g.controls else ("cnot" if len(g.controls) == 1 else "mcnot")
        elif not g.controls:
            key = f"q(k={g.k},p={p})"
        else:
            sugar = _SUGAR_BY_KP.get((g.k, p))
            key = f"c{sugar}" if sugar else f"cq(k={g.k},p={p})"
        counts[key] = counts.get(key, 0) + 1
        if g.controls:
            total_controlled += 1
            if g.target in targets:
                on_targets += 1
            if p == g.k and g.target not in targets:
                forming += 1
    counts["total_controlled"] = total_controlled
    counts["total_on_targets"] = on_targets
    counts["control_forming_cnots"] = forming
    return counts
