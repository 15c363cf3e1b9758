"""Syntax of the three-valued language and of default theories.

Formulas are built from lowercase atoms with negation ``~``, implication
``->``, conjunction ``&``, disjunction ``|``, and the unary operators ``L``
("certainly") and ``M`` ("possibly").  ``L`` and ``M`` are reserved uppercase
tokens while atoms start with a lowercase letter, so the lexer never confuses
the two.

Grammar (whitespace between tokens is ignored)::

    formula := imp
    imp     := disj ("->" imp)?            right-associative
    disj    := conj ("|" conj)*            left-associative
    conj    := unary ("&" unary)*          left-associative
    unary   := ("~" | "L" | "M") unary | atom | "(" formula ")"
    atom    := [a-z][A-Za-z0-9_]*

Theory files (``.dl3``) are line-oriented UTF-8::

    % a comment line
    fact: <formula>.
    default: <prereq> : <just> ("," <just>)* / <consequent>.

Parsing a theory preserves the order of defaults as written; a duplicate fact
or default raises :class:`DuplicateWarning` and the duplicate is dropped.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Iterable, NoReturn

__all__ = [
    "ARITY",
    "And",
    "Atom",
    "Cert",
    "Default",
    "DefaultTheory",
    "DuplicateWarning",
    "Formula",
    "Impl",
    "Not",
    "Or",
    "ParseError",
    "Poss",
    "Token",
    "TokenParser",
    "atoms",
    "children",
    "connective",
    "parse_default",
    "parse_formula",
    "parse_formula_list",
    "parse_theory",
    "print_default",
    "print_formula",
    "sort_key",
    "tokenize",
]

_ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*")


class ParseError(Exception):
    """Rejected input, with a 1-based source position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


class DuplicateWarning(UserWarning):
    """A duplicate fact or default in a theory file (the duplicate is dropped)."""


# ---------------------------------------------------------------------------
# Formulas


class Formula:
    """Base class of the formula AST; concrete nodes are frozen dataclasses."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not _ATOM_RE.fullmatch(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class Impl(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Cert(Formula):
    arg: Formula


@dataclass(frozen=True)
class Poss(Formula):
    arg: Formula


_RANK = {Atom: 0, Not: 1, Impl: 2, And: 3, Or: 4, Cert: 5, Poss: 6}
_CONNECTIVE = {Not: "~", Impl: "->", And: "&", Or: "|", Cert: "L", Poss: "M"}

#: Argument count of each connective token.
ARITY = {"~": 1, "->": 2, "&": 2, "|": 2, "L": 1, "M": 1}


def connective(f: Formula) -> str | None:
    """Token of the outermost connective, or None for atoms."""
    return _CONNECTIVE.get(type(f))


def children(f: Formula) -> tuple[Formula, ...]:
    """Immediate subformulas, left to right."""
    if isinstance(f, Atom):
        return ()
    if isinstance(f, (Not, Cert, Poss)):
        return (f.arg,)
    return (f.left, f.right)  # type: ignore[union-attr]


def sort_key(f: Formula) -> tuple:
    """Key for the canonical total order on formulas.

    Orders by constructor rank, then recursively by children, then by atom
    name; equal keys coincide with structural equality.
    """
    if isinstance(f, Atom):
        return (0, f.name)
    return (_RANK[type(f)],) + tuple(sort_key(c) for c in children(f))


def atoms(f: Formula) -> tuple[str, ...]:
    """Atom names occurring in ``f``, sorted lexicographically."""
    seen: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            seen.add(g.name)
        else:
            stack.extend(children(g))
    return tuple(sorted(seen))


# ---------------------------------------------------------------------------
# Defaults and theories


@dataclass(frozen=True)
class Default:
    """Inference rule ``prereq : just1, ..., justn / consequent`` with n >= 1."""

    prereq: Formula
    justifications: tuple[Formula, ...]
    consequent: Formula

    def __post_init__(self):
        if not self.justifications:
            raise ValueError("a default needs at least one justification")


@dataclass(frozen=True)
class DefaultTheory:
    """Facts plus an ordered, duplicate-free list of defaults."""

    facts: frozenset[Formula]
    defaults: tuple[Default, ...]

    def __post_init__(self):
        if len(set(self.defaults)) != len(self.defaults):
            raise ValueError("duplicate default in theory")


# ---------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class Token:
    kind: str  # the symbol itself, "atom", or "end"
    text: str
    line: int
    column: int


def tokenize(text: str, first_line: int = 1) -> list[Token]:
    """Split ``text`` into tokens, skipping whitespace and ``%`` comments."""
    tokens: list[Token] = []
    line, col = first_line, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith("->", i):
            tokens.append(Token("->", "->", line, col))
            i += 2
            col += 2
            continue
        if ch in "~&|(),;:/.[]!+-" or ch in ("L", "M"):
            tokens.append(Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        m = _ATOM_RE.match(text, i)
        if m:
            name = m.group()
            tokens.append(Token("atom", name, line, col))
            i = m.end()
            col += len(name)
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class TokenParser:
    """Recursive-descent parser over a token list.

    The grammar entry points are methods so that other modules can embed
    formulas and defaults in their own surface syntax (sequents, constraint
    lists, theory files).
    """

    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._pos = 0

    def peek(self) -> Token:
        return self._tokens[self._pos]

    def at_end(self) -> bool:
        return self.peek().kind == "end"

    def accept(self, kind: str) -> Token | None:
        tok = self.peek()
        if tok.kind == kind:
            self._pos += 1
            return tok
        return None

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.accept(kind)
        if tok is None:
            self.fail(what or f"'{kind}'")
        return tok

    def expect_end(self) -> None:
        if not self.at_end():
            self.fail("end of input")

    def fail(self, expected: str) -> NoReturn:
        tok = self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"expected {expected}, found {found}", tok.line, tok.column)

    # -- formula grammar ----------------------------------------------------

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Impl(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.accept("~"):
            return Not(self.unary())
        if self.accept("L"):
            return Cert(self.unary())
        if self.accept("M"):
            return Poss(self.unary())
        tok = self.accept("atom")
        if tok is not None:
            return Atom(tok.text)
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        self.fail("a formula")

    def formula_list(self) -> tuple[Formula, ...]:
        out = [self.formula()]
        while self.accept(","):
            out.append(self.formula())
        return tuple(out)

    def default(self) -> Default:
        prereq = self.formula()
        self.expect(":")
        justifications = self.formula_list()
        self.expect("/")
        return Default(prereq, justifications, self.formula())


def parse_formula(text: str) -> Formula:
    """Parse a single formula; rejects empty input and trailing garbage."""
    p = TokenParser(tokenize(text))
    if p.at_end():
        p.fail("a formula")
    f = p.formula()
    p.expect_end()
    return f


def parse_formula_list(text: str) -> tuple[Formula, ...]:
    """Comma-separated formulas; blank input is the empty list."""
    p = TokenParser(tokenize(text))
    if p.at_end():
        return ()
    out = p.formula_list()
    p.expect_end()
    return out


def parse_default(text: str) -> Default:
    """A bare default ``A : B1, ..., Bn / C`` (no trailing dot)."""
    p = TokenParser(tokenize(text))
    d = p.default()
    p.expect_end()
    return d


def parse_theory(text: str) -> DefaultTheory:
    """Parse a ``.dl3`` theory file; default order is preserved as written."""
    facts: list[Formula] = []
    defaults: list[Default] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("%"):
            continue
        p = TokenParser(tokenize(raw, first_line=lineno))
        head = p.expect("atom", "'fact' or 'default'")
        if head.text == "fact":
            p.expect(":")
            f = p.formula()
            p.expect(".")
            p.expect_end()
            if f in facts:
                warnings.warn(f"duplicate fact {print_formula(f)!r} dropped",
                              DuplicateWarning, stacklevel=2)
            else:
                facts.append(f)
        elif head.text == "default":
            p.expect(":")
            d = p.default()
            p.expect(".")
            p.expect_end()
            if d in defaults:
                warnings.warn(f"duplicate default {print_default(d)!r} dropped",
                              DuplicateWarning, stacklevel=2)
            else:
                defaults.append(d)
        else:
            raise ParseError(f"expected 'fact' or 'default', found {head.text!r}",
                             head.line, head.column)
    return DefaultTheory(frozenset(facts), tuple(defaults))


# ---------------------------------------------------------------------------
# Printer

_PREC = {"->": 1, "|": 2, "&": 3}


def print_formula(f: Formula) -> str:
    """Minimal-parentheses rendering; parses back to a structurally equal tree."""
    return _render(f, 0)


def _render(f: Formula, floor: int) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Not):
        return "~" + _render(f.arg, 4)
    if isinstance(f, Cert):
        return "L " + _render(f.arg, 4)
    if isinstance(f, Poss):
        return "M " + _render(f.arg, 4)
    if isinstance(f, And):
        text = _render(f.left, 3) + " & " + _render(f.right, 4)
    elif isinstance(f, Or):
        text = _render(f.left, 2) + " | " + _render(f.right, 3)
    else:
        assert isinstance(f, Impl)
        text = _render(f.left, 2) + " -> " + _render(f.right, 1)
    return f"({text})" if _PREC[connective(f)] < floor else text


def print_default(d: Default) -> str:
    justs = ", ".join(print_formula(b) for b in d.justifications)
    return f"{print_formula(d.prereq)} : {justs} / {print_formula(d.consequent)}"
