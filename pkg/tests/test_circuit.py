"""Circuit text format: parser, renderer, validation, gate census."""

import pytest

from cnq import (
    Anf,
    BadRootError,
    Circuit,
    Gate,
    Line,
    ParseError,
    SelfControlError,
    UndeclaredLineError,
    ZeroPowerError,
)

from conftest import load

FIGS = ["fig1", "fig2", "fig3", "fig4", "fig4_pre", "fig5", "fig6"]


# -- parsing -------------------------------------------------------------------


def test_parse_lines_and_roles(fig2):
    assert fig2.line_names == ("a", "b", "c", "t")
    assert fig2.target_names() == ("t",)
    assert fig2.line("a").role == "control"
    assert fig2.line("t").role == "target"
    with pytest.raises(UndeclaredLineError):
        fig2.line("z")


def test_parse_comments_and_blank_lines():
    c = Circuit.parse(
        """
        # full-line comment
        line a
        line t target   # trailing comment
        cnot a t
        """
    )
    assert len(c.gates) == 1
    assert c.gates[0] == Gate.make(1, 1, ("a",), "t")


def test_parse_gate_statements():
    c = Circuit.parse(
        "line a\nline b\nline t target\n"
        "not a\ncnot a b\nccx a b t\n"
        "v a -> t\nv* a b -> t\nw a -> t\nw* a -> t\n"
        "q k=8 p=3 a -> t\nq k=2 p=1 -> t\n"
    )
    ks = [(g.k, g.p, g.controls) for g in c.gates]
    assert ks == [
        (1, 1, ()),
        (1, 1, ("a",)),
        (1, 1, ("a", "b")),
        (2, 1, ("a",)),
        (2, 3, ("a", "b")),
        (4, 1, ("a",)),
        (4, 7, ("a",)),
        (8, 3, ("a",)),
        (2, 1, ()),
    ]


def test_parse_spec_expression(fig2):
    assert str(fig2.specs["t"]) == "t ^ a&b ^ b&c"


@pytest.mark.parametrize("name", FIGS)
def test_fixtures_round_trip(name):
    c = load(name)
    assert Circuit.parse(str(c)) == c
    assert c.validate() == []


@pytest.mark.parametrize(
    "text,err,loc",
    [
        ("", ParseError, (1, 1)),
        ("line", ParseError, (1, 1)),
        ("line 2x", ParseError, (1, 6)),
        ("line a\nline a", ParseError, (2, 6)),
        ("line a\nline b ancilla", ParseError, (2, 8)),
        ("line a\nfrobnicate a", ParseError, (2, 1)),
        ("line a\ncnot a b", UndeclaredLineError, (2, 8)),
        ("line a\nv b -> a", UndeclaredLineError, (2, 3)),
        ("line a\nline t target\nq k=3 p=1 a -> t", BadRootError, (3, None)),
        ("line a\nline t target\nq k=2 p=4 a -> t", ZeroPowerError, (3, None)),
        ("line a\nline t target\nv t -> t", SelfControlError, (3, None)),
        ("line a\nline t target\nccx a a t", ParseError, (3, None)),
        ("line a\nline t target\nq k=2 a -> t", ParseError, (3, 1)),
        ("line a\nline t target\nv a t", ParseError, (3, 1)),
        ("line t target\nspec t", ParseError, (2, 1)),
        ("line a\nline t target\nspec a = a", ParseError, (3, 6)),
        ("line t target\nspec t = t ^ q", UndeclaredLineError, (2, None)),
        ("line t target\nspec t = t\nspec t = 0", ParseError, (3, 6)),
        ("line t target\nspec t = t ^^ 1", ParseError, (2, None)),
    ],
)
def test_parse_errors_carry_location(text, err, loc):
    with pytest.raises(err) as e:
        Circuit.parse(text)
    line, col = loc
    assert e.value.line == line
    if col is not None:
        assert e.value.col == col


# -- gate constructor ------------------------------------------------------------


def test_gate_make_canonicalizes_power():
    assert Gate.make(2, -1, ("a",), "t").p == 3
    assert Gate.make(2, 5, ("a",), "t").p == 1
    assert Gate.make(4, 9, (), "t").p == 1
    with pytest.raises(ZeroPowerError):
        Gate.make(2, 4, ("a",), "t")
    with pytest.raises(BadRootError):
        Gate.make(0, 1, (), "t")
    with pytest.raises(BadRootError):
        Gate.make(6, 1, (), "t")


def test_gate_not_family_predicate():
    assert Gate.make(1, 1, ("a",), "t").is_not_family
    assert Gate.make(2, 2, ("a",), "t").is_not_family
    assert not Gate.make(2, 1, ("a",), "t").is_not_family
    assert not Gate.make(4, 2, ("a",), "t").is_not_family


# -- rendering ---------------------------------------------------------------------


def test_render_sugar_forms():
    mk = Gate.make
    pairs = [
        (mk(1, 1, (), "t"), "not t"),
        (mk(1, 1, ("a",), "t"), "cnot a t"),
        (mk(1, 1, ("a", "b"), "t"), "ccx a b t"),
        (mk(2, 1, ("a",), "t"), "v a -> t"),
        (mk(2, 3, ("a",), "t"), "v* a -> t"),
        (mk(4, 1, ("a",), "t"), "w a -> t"),
        (mk(4, 7, ("a",), "t"), "w* a -> t"),
        (mk(2, 1, (), "t"), "q k=2 p=1 -> t"),
        (mk(8, 5, ("a", "b"), "t"), "q k=8 p=5 a b -> t"),
        (mk(2, 2, ("a",), "t"), "q k=2 p=2 a -> t"),
    ]
    for g, text in pairs:
        c = Circuit((Line("a"), Line("b"), Line("t", True)), (g,))
        assert str(c).splitlines()[-1] == text
        assert Circuit.parse(str(c)).gates[0] == g


# -- validation -------------------------------------------------------------------


def test_validate_collects_diagnostics():
    # bypass the checked constructor to exercise the linter
    c = Circuit(
        (Line("a"), Line("a"), Line("t", True)),
        (
            Gate(3, 1, (), "t"),
            Gate(2, 4, ("a",), "t"),
            Gate(1, 1, ("z",), "t"),
            Gate(1, 1, ("t",), "t"),
            Gate(1, 1, ("a", "a"), "q"),
        ),
        {"ghost": Anf.var("a")},
    )
    codes = sorted(d.code for d in c.validate())
    assert codes == [
        "E_BAD_K",
        "E_SELF_CONTROL",
        "E_SYNTAX",
        "E_SYNTAX",
        "E_UNDECLARED_LINE",
        "E_UNDECLARED_LINE",
        "E_UNDECLARED_LINE",
        "E_ZERO_POWER",
    ]
    assert "gate 0" in str(next(d for d in c.validate() if d.code == "E_BAD_K"))


# -- gate census ---------------------------------------------------------------------


def test_gate_count_fig2(fig2):
    counts = fig2.gate_count()
    assert counts["total_controlled"] == 10
    assert counts["cv"] == 4
    assert counts["cv*"] == 2
    assert counts["cnot"] == 4
    assert counts["total_on_targets"] == 6
    assert counts["control_forming_cnots"] == 4


@pytest.mark.parametrize(
    "name,total",
    [("fig2", 10), ("fig3", 9), ("fig4", 8), ("fig5", 7), ("fig6", 10)],
)
def test_gate_count_totals(name, total):
    assert load(name).gate_count()["total_controlled"] == total


def test_gate_count_fig6_both_readings(fig6):
    counts = fig6.gate_count()
    assert counts["total_controlled"] == 10
    assert counts["total_on_targets"] == 8
    assert counts["control_forming_cnots"] == 2


def test_gate_count_categories():
    c = Circuit.parse(
        "line a\nline t target\nnot a\nq k=2 p=1 -> t\nq k=2 p=2 a -> t\nccx a a t"
        .replace("ccx a a t", "v a -> t")
    )
    counts = c.gate_count()
    assert counts["not"] == 1
    assert counts["q(k=2,p=1)"] == 1
    assert counts["cnot"] == 1          # k=2 p=2 is NOT-family
    assert counts["cv"] == 1
    assert counts["total_controlled"] == 2  # the bare not/q gates carry no control
