from pathlib import Path

import pytest

from cnq import Circuit

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.cnq"


def load(name: str) -> Circuit:
    return Circuit.parse(fixture_path(name).read_text())


@pytest.fixture
def fig2() -> Circuit:
    return load("fig2")


@pytest.fixture
def fig6() -> Circuit:
    return load("fig6")
