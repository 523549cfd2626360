"""Seeded random circuits and the calculus-versus-matrices self-test."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .circuit import Circuit, Gate, Line
from .errors import TargetInteractionError
from .oracle import cross_check
from .symbolic import evaluate

ROOTS = (1, 2, 4, 8)


def random_circuit(
    rng: random.Random,
    *,
    max_lines: int = 5,
    max_gates: int = 20,
    roots: tuple[int, ...] = ROOTS,
) -> Circuit:
    """A random circuit; may not be symbolically evaluable."""
    n = rng.randint(2, max_lines)
    names = [f"x{i}" for i in range(n)]
    lines = tuple(Line(name, rng.random() < 0.5) for name in names)
    gates = []
    for _ in range(rng.randint(1, max_gates)):
        k = rng.choice(roots)
        p = rng.randrange(1, 2 * k)
        target = rng.choice(names)
        others = [nm for nm in names if nm != target]
        ctrls = rng.sample(others, rng.randint(0, min(2, len(others))))
        gates.append(Gate.make(k, p, ctrls, target))
    return Circuit(lines, tuple(gates))


def random_valid_circuit(rng: random.Random, **kwargs) -> Circuit:
    """A random circuit whose controls stay Boolean throughout."""
    for _ in range(1000):
        c = random_circuit(rng, **kwargs)
        try:
            evaluate(c)
        except TargetInteractionError:
            continue
        return c
    raise RuntimeError("could not draw an evaluable random circuit")


@dataclass
class SelfTestResult:
    circuits: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def self_test(seed: int, count: int = 200, **kwargs) -> SelfTestResult:
    """Cross-check ``count`` seeded random circuits against simulation."""
    rng = random.Random(seed)
    failures = []
    for i in range(count):
        c = random_valid_circuit(rng, **kwargs)
        res = cross_check(c, evaluate(c))
        if not res.passed:
            failures.append(
                f"circuit {i}: witness {res.witness}, {res.detail}\n{c}"
            )
    return SelfTestResult(count, failures)
