"""Anti-sequent calculus: establish invalidity by deduction.

An anti-sequent Gamma1 || Gamma2 || Gamma3 is refutable when some
interpretation makes the matching sequent false, i.e. every formula avoids
its component's value.  Each rule commits to one tuple of argument values
that keeps the principal's connective from taking the component's value: the
principal is removed and every argument is inserted into both components
other than its committed value, which pins that value in any refuting
interpretation.  The rules are single-premise but not invertible, so search
backtracks over the committed tuples; a refutation is a chain ending in an
atomic anti-axiom that carries an explicit witness interpretation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

from .semantics import (
    VALUES,
    Interpretation,
    TruthValue,
    UndeclaredAtomError,
    apply_connective,
    atomic_countermodel,
    tt_sequent_true,
)
from .sequent import ComponentTriple, Sequent3, select_principal
from .syntax import ARITY, Atom, Formula, TokenParser, children, connective, tokenize

__all__ = [
    "AntiSequent3",
    "RefutationFailure",
    "RefutationTree",
    "apply_antirule",
    "as_sequent",
    "check_refutation",
    "countermodel_of",
    "generate_antirules",
    "is_antiaxiom",
    "parse_antisequent",
    "print_antisequent",
    "refutation_from_doc",
    "refutation_to_doc",
    "refute",
]


class AntiSequent3(ComponentTriple):
    """Refutable when some interpretation falsifies the matching sequent."""


def as_sequent(a: AntiSequent3) -> Sequent3:
    return Sequent3(*a.components)


@cache
def generate_antirules(conn: str, position: int) -> tuple[tuple[TruthValue, ...], ...]:
    """Argument-value tuples keeping ``conn`` from taking the value of
    ``position``; each tuple is one single-premise rule."""
    target = VALUES[position - 1]
    return tuple(w for w in product(VALUES, repeat=ARITY[conn])
                 if apply_connective(conn, w) is not target)


def _rule_name(conn: str, position: int, values: tuple[TruthValue, ...]) -> str:
    return f"{conn}:{position}@{','.join(v.symbol for v in values)}"


def apply_antirule(a: AntiSequent3, principal: Formula, position: int,
                   values: tuple[TruthValue, ...]) -> AntiSequent3:
    """Premise: drop the principal, pin each argument to its committed value by
    inserting it into both other components."""
    s = a.with_component(position, a.component(position) - {principal})
    for arg, v in zip(children(principal), values):
        for pos in (1, 2, 3):
            if pos != v.rank + 1:
                s = s.with_component(pos, s.component(pos) | {arg})
    return s


def is_antiaxiom(a: AntiSequent3) -> Interpretation | None:
    """Witness interpretation for an all-atomic anti-sequent, or None when
    every assignment satisfies some component.

    Precondition: every formula is atomic (ValueError otherwise).  The
    witness gives each atom the value of the least component not containing
    it; atoms outside all components would get f.
    """
    return atomic_countermodel(a.components)


@dataclass(frozen=True)
class RefutationTree:
    conclusion: AntiSequent3
    rule: str
    premise: "RefutationTree | None" = None
    witness: Interpretation | None = None


@dataclass(frozen=True)
class RefutationFailure:
    """No refutation exists: the matching sequent is valid."""

    root: AntiSequent3

    def __bool__(self) -> bool:
        return False


def refute(a: AntiSequent3) -> RefutationTree | RefutationFailure:
    """Backward search with backtracking over committed value tuples.

    Tuples are tried in canonical order (f < u < t, pointwise), so the
    returned refutation and its witness are deterministic.
    """
    memo: dict[AntiSequent3, RefutationTree | RefutationFailure] = {}

    def go(a: AntiSequent3) -> RefutationTree | RefutationFailure:
        hit = memo.get(a)
        if hit is not None:
            return hit
        if a.gamma1 & a.gamma2 & a.gamma3:
            # a shared formula would have to avoid f, u and t at once; no
            # descendant can ever reach a witness (formulas are only added)
            memo[a] = failure = RefutationFailure(a)
            return failure
        selected = select_principal(a)
        if selected is None:
            witness = is_antiaxiom(a)
            result: RefutationTree | RefutationFailure = (
                RefutationFailure(a) if witness is None
                else RefutationTree(a, "anti-axiom", witness=witness))
        else:
            principal, position = selected
            conn = connective(principal)
            result = RefutationFailure(a)
            for values in generate_antirules(conn, position):
                sub = go(apply_antirule(a, principal, position, values))
                if sub:
                    result = RefutationTree(a, _rule_name(conn, position, values), premise=sub)
                    break
        memo[a] = result
        return result

    return go(a)


def countermodel_of(tree: RefutationTree) -> Interpretation:
    """The leaf witness extended (with f) to all atoms of the root; it
    falsifies the root's sequent reading."""
    node = tree
    while node.premise is not None:
        node = node.premise
    if node.witness is None:
        raise ValueError("malformed refutation: leaf carries no witness")
    table = node.witness.as_dict()
    return Interpretation(tuple(
        (name, table.get(name, TruthValue.F)) for name in tree.conclusion.atoms()))


# ---------------------------------------------------------------------------
# Checking


def check_refutation(tree: RefutationTree, conclusion: AntiSequent3 | None = None) -> bool:
    """Audit a refutation chain without redoing search.

    Each step must instantiate its named rule, the leaf must be an atomic
    anti-axiom, and the leaf witness must falsify the sequent reading of
    every node on the chain.
    """
    if conclusion is not None and tree.conclusion != conclusion:
        return False
    chain = [tree]
    while chain[-1].premise is not None:
        if chain[-1].witness is not None:
            return False
        chain.append(chain[-1].premise)
    leaf = chain[-1]
    if leaf.rule != "anti-axiom" or leaf.witness is None:
        return False
    if any(not isinstance(f, Atom) for comp in leaf.conclusion.components for f in comp):
        return False
    for parent, child in zip(chain, chain[1:]):
        if not _rule_matches(parent, child):
            return False
    table = leaf.witness.as_dict()
    for node in chain:
        interp = Interpretation(tuple(
            (name, table.get(name, TruthValue.F)) for name in node.conclusion.atoms()))
        try:
            if tt_sequent_true(node.conclusion, interp):
                return False
        except UndeclaredAtomError:
            return False
    return True


def _rule_matches(parent: RefutationTree, child: RefutationTree) -> bool:
    conn, sep, rest = parent.rule.partition(":")
    pos_text, at, value_text = rest.partition("@")
    if not sep or not at or conn not in ARITY or pos_text not in {"1", "2", "3"}:
        return False
    position = int(pos_text)
    try:
        values = tuple(TruthValue.from_symbol(s) for s in value_text.split(","))
    except ValueError:
        return False
    if len(values) != ARITY[conn]:
        return False
    if apply_connective(conn, values) is VALUES[position - 1]:
        return False  # the committed tuple must avoid the component's value
    for f in parent.conclusion.component(position):
        if connective(f) == conn and apply_antirule(parent.conclusion, f, position, values) == child.conclusion:
            return True
    return False


# ---------------------------------------------------------------------------
# Text and document forms


def print_antisequent(a: AntiSequent3) -> str:
    from .sequent import print_sequent

    return "!" + print_sequent(Sequent3(*a.components))


def parse_antisequent(text: str) -> AntiSequent3:
    """Parse ``![ f1 ; f2 ; f3 ]``."""
    from .sequent import parse_component_fields

    p = TokenParser(tokenize(text))
    p.expect("!")
    p.expect("[")
    comps = parse_component_fields(p)
    p.expect_end()
    return AntiSequent3.of(*comps)


def refutation_to_doc(tree: RefutationTree) -> dict:
    doc = {
        "rule": tree.rule,
        "sequent": print_antisequent(tree.conclusion),
        "premises": [] if tree.premise is None else [refutation_to_doc(tree.premise)],
    }
    if tree.witness is not None:
        doc["witness"] = {name: v.symbol for name, v in tree.witness.assignment}
    return doc


def refutation_from_doc(doc) -> RefutationTree:
    if not isinstance(doc, dict) or not {"rule", "sequent", "premises"} <= set(doc):
        raise ValueError("malformed refutation document")
    premises = doc["premises"]
    if len(premises) > 1:
        raise ValueError("malformed refutation document: multiple premises")
    witness = None
    if "witness" in doc:
        witness = Interpretation.from_mapping(doc["witness"])
    return RefutationTree(
        parse_antisequent(doc["sequent"]),
        str(doc["rule"]),
        premise=refutation_from_doc(premises[0]) if premises else None,
        witness=witness,
    )
