"""Exact algebra for control expressions and gate-power polynomials.

Two expression domains share one monomial representation (a monomial is a
frozenset of variable names; the empty monomial is the constant 1):

* :class:`Anf`    -- XOR of AND-monomials with GF(2) coefficients, the
  canonical form of a Boolean function.  Stored as a set of monomials;
  XOR is symmetric difference, so equal functions are equal sets.
* :class:`MlPoly` -- multilinear polynomial with arbitrary-precision
  integer coefficients, the canonical form of an integer-valued function
  on {0,1}^n.  Stored as a monomial -> coefficient map without zeros.

Conversions are exact.  ``Anf.to_arith`` rewrites XOR into ring arithmetic
via  P xor Q = P + Q - 2PQ  with multilinear reduction (v*v = v), so e.g.
``a ^ b`` becomes ``a + b - 2*a*b`` and ``1 ^ a`` becomes ``1 - a``.
``MlPoly.from_values`` interpolates the unique multilinear polynomial
through a value table on {0,1}^n (the coefficient/value transform is
unimodular, hence exactly invertible over the integers).
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Mapping, Sequence

from .errors import EnumerationLimitError, ParseError, UnboundVariableError

# Exhaustive enumeration over {0,1}^n is refused above this many variables.
DEFAULT_ENUM_GUARD = 20

Assignment = Mapping[str, int]

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def check_var_name(name: str) -> str:
    if not isinstance(name, str) or not _VAR_RE.match(name):
        raise ParseError(f"invalid variable name {name!r}")
    return name


def term_key(monomial: frozenset) -> tuple:
    """Canonical term order: degree first, then variable names."""
    return (len(monomial), tuple(sorted(monomial)))


def _monomial_value(monomial: frozenset, point: Assignment) -> int:
    for v in monomial:
        try:
            bit = point[v]
        except KeyError:
            raise UnboundVariableError(f"no value for variable {v!r}") from None
        if bit not in (0, 1):
            raise UnboundVariableError(f"variable {v!r} bound to non-bit {bit!r}")
        if bit == 0:
            return 0
    return 1


def iter_assignments(variables: Iterable[str]) -> Iterable[dict[str, int]]:
    """All points of {0,1}^n in counting order, first variable most significant."""
    vs = list(variables)
    n = len(vs)
    for i in range(1 << n):
        yield {vs[j]: (i >> (n - 1 - j)) & 1 for j in range(n)}


class Anf:
    """A Boolean function as an XOR-of-ANDs normal form."""

    __slots__ = ("monomials",)

    def __init__(self, monomials: Iterable[Iterable[str]] = ()):
        acc: set[frozenset[str]] = set()
        for m in monomials:
            mono = frozenset(m)
            if mono in acc:        # XOR semantics: repeated monomials cancel
                acc.discard(mono)
            else:
                acc.add(mono)
        self.monomials: frozenset[frozenset[str]] = frozenset(acc)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Anf":
        return cls()

    @classmethod
    def one(cls) -> "Anf":
        return cls([()])

    @classmethod
    def var(cls, name: str) -> "Anf":
        return cls([(check_var_name(name),)])

    @classmethod
    def parse(cls, text: str) -> "Anf":
        """Parse ``a ^ b&(c^1)`` syntax; ``&`` binds tighter than ``^``."""
        return _ExprParser(text).run_anf()

    # -- algebra -----------------------------------------------------------

    def __xor__(self, other: "Anf") -> "Anf":
        if not isinstance(other, Anf):
            return NotImplemented
        return Anf._from_monomials(self.monomials ^ other.monomials)

    def __and__(self, other: "Anf") -> "Anf":
        if not isinstance(other, Anf):
            return NotImplemented
        acc: set[frozenset[str]] = set()
        for m1 in self.monomials:
            for m2 in other.monomials:
                m = m1 | m2
                if m in acc:
                    acc.discard(m)
                else:
                    acc.add(m)
        return Anf._from_monomials(frozenset(acc))

    @classmethod
    def _from_monomials(cls, monomials: frozenset) -> "Anf":
        out = cls.__new__(cls)
        out.monomials = monomials
        return out

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def is_one(self) -> bool:
        return self.monomials == frozenset([frozenset()])

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for m in self.monomials:
            out |= m
        return frozenset(out)

    def evaluate(self, point: Assignment) -> int:
        acc = 0
        for m in self.monomials:
            acc ^= _monomial_value(m, point)
        return acc

    def to_arith(self) -> "MlPoly":
        """The multilinear integer polynomial with the same 0/1 values.

        Folds monomials with  acc xor t = acc + t - 2*acc*t;  the result is
        independent of fold order because each step preserves values.
        """
        acc = MlPoly.zero()
        for m in sorted(self.monomials, key=term_key):
            t = MlPoly({m: 1})
            acc = acc + t - 2 * (acc * t)
        return acc

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Anf) and self.monomials == other.monomials

    def __hash__(self) -> int:
        return hash(("Anf", self.monomials))

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        parts = []
        for m in sorted(self.monomials, key=term_key):
            parts.append("&".join(sorted(m)) if m else "1")
        return " ^ ".join(parts)

    def __repr__(self) -> str:
        return f"Anf({str(self)!r})"


def display_anf(x: Anf) -> str:
    """Render with a factored prefix when every monomial shares variables.

    ``a&b ^ b&c`` displays as ``b&(a ^ c)``; anything without a common
    variable stays in expanded form.  Display sugar only: not parsed back.
    """
    monos = list(x.monomials)
    if len(monos) >= 2:
        common = frozenset.intersection(*monos)
        if common:
            rest = Anf._from_monomials(frozenset(m - common for m in monos))
            return "&".join(sorted(common)) + "&(" + str(rest) + ")"
    return str(x)


class MlPoly:
    """A multilinear polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[frozenset, int] | Iterable[tuple] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[frozenset[str], int] = {}
        for m, c in items:
            mono = frozenset(m)
            c2 = acc.get(mono, 0) + c
            if c2:
                acc[mono] = c2
            else:
                acc.pop(mono, None)
        self.terms: dict[frozenset[str], int] = acc

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MlPoly":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "MlPoly":
        return cls({frozenset(): c})

    @classmethod
    def var(cls, name: str) -> "MlPoly":
        return cls({frozenset([check_var_name(name)]): 1})

    @classmethod
    def parse(cls, text: str) -> "MlPoly":
        """Parse ``2*a*b - c + 3`` syntax (sums of integer-scaled products)."""
        return _ExprParser(text).run_poly()

    @classmethod
    def from_values(
        cls,
        variables: Sequence[str],
        values: Callable[[Assignment], int] | Mapping[tuple, int],
        *,
        guard: int = DEFAULT_ENUM_GUARD,
    ) -> "MlPoly":
        """Interpolate the unique multilinear polynomial through a value table.

        ``values`` is either a callable on assignments or a mapping keyed by
        bit tuples aligned with ``variables``.  Runs the subset (Moebius)
        transform in place: the coefficient of monomial S is
        sum over T subset of S of (-1)^|S minus T| * value(indicator of T).
        """
        vs = [check_var_name(v) for v in variables]
        if len(set(vs)) != len(vs):
            raise ParseError("duplicate variable in interpolation basis")
        n = len(vs)
        if n > guard:
            raise EnumerationLimitError(
                f"{n} variables exceed the enumeration guard ({guard})"
            )
        table = [0] * (1 << n)
        for mask in range(1 << n):
            bits = tuple((mask >> j) & 1 for j in range(n))
            if callable(values):
                table[mask] = int(values({vs[j]: bits[j] for j in range(n)}))
            else:
                table[mask] = int(values[bits])
        for j in range(n):
            bit = 1 << j
            for mask in range(1 << n):
                if mask & bit:
                    table[mask] -= table[mask ^ bit]
        terms = {}
        for mask in range(1 << n):
            if table[mask]:
                terms[frozenset(vs[j] for j in range(n) if mask >> j & 1)] = table[mask]
        return cls(terms)

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "MlPoly") -> "MlPoly":
        if not isinstance(other, MlPoly):
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            c2 = acc.get(m, 0) + c
            if c2:
                acc[m] = c2
            else:
                acc.pop(m, None)
        return MlPoly._wrap(acc)

    def __sub__(self, other: "MlPoly") -> "MlPoly":
        if not isinstance(other, MlPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "MlPoly":
        return MlPoly._wrap({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "MlPoly | int") -> "MlPoly":
        if isinstance(other, int):
            if other == 0:
                return MlPoly.zero()
            return MlPoly._wrap({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MlPoly):
            return NotImplemented
        acc: dict[frozenset[str], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 | m2          # multilinear: v*v = v
                c = acc.get(m, 0) + c1 * c2
                if c:
                    acc[m] = c
                else:
                    acc.pop(m, None)
        return MlPoly._wrap(acc)

    __rmul__ = __mul__

    @classmethod
    def _wrap(cls, terms: dict) -> "MlPoly":
        out = cls.__new__(cls)
        out.terms = terms
        return out

    def reduce_mod(self, m: int) -> "MlPoly":
        """Coefficientwise reduction into canonical residues [0, m)."""
        if m < 1:
            raise ValueError(f"modulus must be positive, got {m}")
        return MlPoly._wrap(
            {mono: c % m for mono, c in self.terms.items() if c % m}
        )

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for m in self.terms:
            out |= m
        return frozenset(out)

    def evaluate(self, point: Assignment) -> int:
        acc = 0
        for m, c in self.terms.items():
            acc += c * _monomial_value(m, point)
        return acc

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MlPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("MlPoly", frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for i, (m, c) in enumerate(sorted(self.terms.items(), key=lambda t: term_key(t[0]))):
            mag = abs(c)
            body = "*".join(sorted(m))
            if not m:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if i == 0:
                out = ("-" if c < 0 else "") + piece
            else:
                out += (" - " if c < 0 else " + ") + piece
        return out

    def __repr__(self) -> str:
        return f"MlPoly({str(self)!r})"


# -- shared expression parser ----------------------------------------------

_EXPR_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|->|[()^&*+-])")


class _ExprParser:
    """Recursive-descent parser for both expression grammars.

    Anf:     expr := term ('^' term)* ; term := factor ('&' factor)* ;
             factor := '0' | '1' | var | '(' expr ')'
    MlPoly:  poly := ['-'] prod (('+'|'-') prod)* ; prod := atom ('*' atom)* ;
             atom := integer | var
    """

    def __init__(self, text: str, col_offset: int = 0):
        self.text = text
        self.col_offset = col_offset
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            m = _EXPR_TOKEN.match(text, pos)
            if not m:
                if not text[pos:].strip():
                    break
                bad = text[pos:].lstrip()[0]
                raise self._err(f"unexpected character {bad!r}", len(text) - len(text[pos:].lstrip()) + 1)
            self.tokens.append((m.group(1), m.start(1) + 1))
            pos = m.end()
        self.i = 0

    def _err(self, message: str, col: int) -> ParseError:
        return ParseError(message, col=col + self.col_offset)

    def _peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _next(self) -> tuple[str, int]:
        if self.i >= len(self.tokens):
            raise self._err("unexpected end of expression", len(self.text) + 1)
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _expect_end(self) -> None:
        if self.i < len(self.tokens):
            tok, col = self.tokens[self.i]
            raise self._err(f"unexpected token {tok!r}", col)

    # Anf grammar

    def run_anf(self) -> Anf:
        out = self._anf_expr()
        self._expect_end()
        return out

    def _anf_expr(self) -> Anf:
        acc = self._anf_term()
        while self._peek() == "^":
            self._next()
            acc = acc ^ self._anf_term()
        return acc

    def _anf_term(self) -> Anf:
        acc = self._anf_factor()
        while self._peek() == "&":
            self._next()
            acc = acc & self._anf_factor()
        return acc

    def _anf_factor(self) -> Anf:
        tok, col = self._next()
        if tok == "0":
            return Anf.zero()
        if tok == "1":
            return Anf.one()
        if tok == "(":
            inner = self._anf_expr()
            closing, ccol = self._next()
            if closing != ")":
                raise self._err(f"expected ')', got {closing!r}", ccol)
            return inner
        if _VAR_RE.match(tok):
            return Anf.var(tok)
        raise self._err(f"expected a variable, constant or '(', got {tok!r}", col)

    # MlPoly grammar

    def run_poly(self) -> MlPoly:
        acc = MlPoly.zero()
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._next()[0] == "-" else 1
        acc = acc + self._poly_prod(sign)
        while self._peek() in ("+", "-"):
            sign = -1 if self._next()[0] == "-" else 1
            acc = acc + self._poly_prod(sign)
        self._expect_end()
        return acc

    def _poly_prod(self, sign: int) -> MlPoly:
        coeff = sign
        monomial: set[str] = set()
        while True:
            tok, col = self._next()
            if tok.isdigit():
                coeff *= int(tok)
            elif _VAR_RE.match(tok):
                monomial.add(tok)
            else:
                raise self._err(f"expected a variable or integer, got {tok!r}", col)
            if self._peek() == "*":
                self._next()
                continue
            break
        return MlPoly({frozenset(monomial): coeff})


def parse_anf(text: str) -> Anf:
    return Anf.parse(text)


def parse_poly(text: str) -> MlPoly:
    return MlPoly.parse(text)
