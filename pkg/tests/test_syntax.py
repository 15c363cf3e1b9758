from __future__ import annotations

import pytest
from hypothesis import given

from conftest import formulas_strategy
from luk3.syntax import (
    And,
    Atom,
    Cert,
    Default,
    DefaultTheory,
    DuplicateWarning,
    Impl,
    Not,
    Or,
    ParseError,
    Poss,
    atoms,
    parse_default,
    parse_formula,
    parse_formula_list,
    parse_theory,
    print_default,
    print_formula,
    sort_key,
)

A, B, C = Atom("a"), Atom("b"), Atom("c")


class TestParseFormula:
    def test_negated_atom(self):
        assert parse_formula("~a") == Not(A)

    def test_implication_is_right_associative(self):
        assert parse_formula("a -> b -> c") == Impl(A, Impl(B, C))

    def test_precedence(self):
        assert parse_formula("L a & M b | c") == Or(And(Cert(A), Poss(B)), C)

    def test_whitespace_insensitive(self):
        assert parse_formula("a->b") == parse_formula("  a  ->\t b ")

    def test_parentheses(self):
        assert parse_formula("a & (b | c)") == And(A, Or(B, C))
        assert parse_formula("L (a -> b)") == Cert(Impl(A, B))

    def test_binary_left_associative(self):
        assert parse_formula("a & b & c") == And(And(A, B), C)
        assert parse_formula("a | b | c") == Or(Or(A, B), C)

    def test_empty_input_rejected(self):
        with pytest.raises(ParseError):
            parse_formula("")
        with pytest.raises(ParseError):
            parse_formula("   ")

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_formula("a & ")
        assert err.value.line == 1
        assert err.value.column == 5
        assert "expected" in str(err.value)

    def test_trailing_garbage_rejected(self):
        with pytest.raises(ParseError) as err:
            parse_formula("a b")
        assert "end of input" in err.value.message

    def test_unknown_character_rejected(self):
        with pytest.raises(ParseError) as err:
            parse_formula("a @ b")
        assert err.value.column == 3

    def test_uppercase_atom_rejected(self):
        with pytest.raises(ParseError):
            parse_formula("Foo")

    def test_unclosed_parenthesis(self):
        with pytest.raises(ParseError) as err:
            parse_formula("(a -> b")
        assert "')'" in err.value.message


class TestPrintFormula:
    def test_negated_atom(self):
        assert print_formula(Not(A)) == "~a"

    def test_conjunction_under_implication_needs_no_parens(self):
        assert print_formula(Impl(And(A, B), C)) == "a & b -> c"

    def test_modal_over_implication_is_parenthesized(self):
        assert print_formula(Cert(Impl(A, B))) == "L (a -> b)"

    def test_nested_unaries(self):
        assert print_formula(Not(Not(A))) == "~~a"
        assert print_formula(Poss(Not(A))) == "M ~a"
        assert print_formula(Not(And(A, B))) == "~(a & b)"

    def test_associativity_parens(self):
        assert print_formula(Impl(Impl(A, B), C)) == "(a -> b) -> c"
        assert print_formula(Or(A, Or(B, C))) == "a | (b | c)"
        assert print_formula(And(And(A, B), C)) == "a & b & c"


class TestAtoms:
    def test_duplicates_collapse(self):
        assert atoms(parse_formula("a -> a")) == ("a",)

    def test_sorted(self):
        assert atoms(parse_formula("L p & ~q")) == ("p", "q")
        assert atoms(parse_formula("M (x -> y) | x")) == ("x", "y")


class TestTheoryFiles:
    def test_fact_and_default(self):
        t = parse_theory("fact: a.\ndefault: a : b / b.")
        assert t.facts == frozenset({A})
        assert t.defaults == (Default(A, (B,), B),)

    def test_comment_lines_skipped(self):
        t = parse_theory("% c\nfact: ~b.")
        assert t.facts == frozenset({Not(B)})
        assert t.defaults == ()

    def test_multiple_justifications(self):
        t = parse_theory("default: a : b1, b2 / c.")
        (d,) = t.defaults
        assert d.justifications == (Atom("b1"), Atom("b2"))

    def test_default_order_preserved(self):
        t = parse_theory("default: a : b / b.\ndefault: b : c / c.\nfact: a.")
        assert [print_default(d) for d in t.defaults] == ["a : b / b", "b : c / c"]

    def test_duplicate_fact_warns_and_dedups(self):
        with pytest.warns(DuplicateWarning):
            t = parse_theory("fact: a.\nfact: a.")
        assert t.facts == frozenset({A})

    def test_duplicate_default_warns_and_dedups(self):
        with pytest.warns(DuplicateWarning):
            t = parse_theory("default: a : b / b.\ndefault: a : b / b.")
        assert len(t.defaults) == 1

    def test_bad_directive(self):
        with pytest.raises(ParseError) as err:
            parse_theory("fact: a.\nrule: b.")
        assert err.value.line == 2

    def test_missing_dot(self):
        with pytest.raises(ParseError):
            parse_theory("fact: a")

    def test_error_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_theory("fact: a.\n\n% ok\nfact: ~.")
        assert err.value.line == 4


class TestDefaults:
    def test_parse_print_round_trip(self):
        d = parse_default("a : b1, b2 / c")
        assert print_default(d) == "a : b1, b2 / c"
        assert parse_default(print_default(d)) == d

    def test_justifications_required(self):
        with pytest.raises(ValueError):
            Default(A, (), B)

    def test_duplicate_defaults_rejected(self):
        d = Default(A, (B,), B)
        with pytest.raises(ValueError):
            DefaultTheory(frozenset(), (d, d))


class TestFormulaList:
    def test_empty(self):
        assert parse_formula_list("") == ()
        assert parse_formula_list("   ") == ()

    def test_split_on_commas(self):
        assert parse_formula_list("a, M b") == (A, Poss(B))

    def test_dangling_comma_rejected(self):
        with pytest.raises(ParseError):
            parse_formula_list("a,")


@given(formulas_strategy())
def test_print_parse_round_trip(f):
    assert parse_formula(print_formula(f)) == f


@given(formulas_strategy(), formulas_strategy())
def test_ordering_is_total(f, g):
    kf, kg = sort_key(f), sort_key(g)
    assert (kf < kg) + (kf == kg) + (kf > kg) == 1
    assert (kf == kg) == (f == g)


def test_atom_name_validation():
    with pytest.raises(ValueError):
        Atom("Upper")
    with pytest.raises(ValueError):
        Atom("")
    assert Atom("a_1X").name == "a_1X"
