"""Three-sided sequent calculus: generated rules, proof search, checking.

A sequent Gamma1 | Gamma2 | Gamma3 pairs one component with each truth value;
it is true under an interpretation when some component holds a formula taking
that component's value, and valid when true under every interpretation.

Logical rules are generated from the truth tables.  Decomposing a connective
at component i starts from the set of argument-value tuples that give the
component's value, writes "some such tuple holds" in CNF over literals
"argument j has value v", and emits one premise per clause: the conclusion
without the principal, plus argument j inserted into the component of v for
every literal of the clause.  Every generated rule is invertible (the
conclusion is true under an interpretation iff all premises are), so backward
search needs no backtracking, and reaching a non-axiomatic atomic sequent
refutes the root definitively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product
from typing import Iterable

from .semantics import VALUES, Interpretation, TruthValue, apply_connective, atomic_countermodel
from .syntax import (
    ARITY,
    Atom,
    Formula,
    TokenParser,
    atoms,
    children,
    connective,
    print_formula,
    sort_key,
    tokenize,
)

__all__ = [
    "ComponentTriple",
    "ProofFailure",
    "ProofTree",
    "RuleInstance",
    "Sequent3",
    "check_proof",
    "entailment_sequent",
    "failure_countermodel",
    "generate_rules",
    "instantiate",
    "is_axiom",
    "parse_component_fields",
    "parse_sequent",
    "print_sequent",
    "proof_from_doc",
    "proof_to_doc",
    "prove",
    "prove_entailment",
    "select_principal",
]


@dataclass(frozen=True)
class ComponentTriple:
    """Shared shape of sequents and anti-sequents: one formula set per value."""

    gamma1: frozenset[Formula]
    gamma2: frozenset[Formula]
    gamma3: frozenset[Formula]

    @classmethod
    def of(cls, g1: Iterable[Formula] = (), g2: Iterable[Formula] = (),
           g3: Iterable[Formula] = ()):
        return cls(frozenset(g1), frozenset(g2), frozenset(g3))

    @property
    def components(self) -> tuple[frozenset[Formula], ...]:
        return (self.gamma1, self.gamma2, self.gamma3)

    def component(self, position: int) -> frozenset[Formula]:
        return self.components[position - 1]

    def with_component(self, position: int, formulas: frozenset[Formula]):
        comps = list(self.components)
        comps[position - 1] = formulas
        return type(self)(*comps)

    def atoms(self) -> tuple[str, ...]:
        names: set[str] = set()
        for comp in self.components:
            for f in comp:
                names.update(atoms(f))
        return tuple(sorted(names))


class Sequent3(ComponentTriple):
    """Components claim value f, u, t respectively; true when one claim holds."""


# ---------------------------------------------------------------------------
# Rule generation

#: One insertion: (argument index, value whose component receives the argument).
Literal = tuple[int, TruthValue]
PremiseTemplate = tuple[Literal, ...]


@cache
def generate_rules(conn: str, position: int) -> tuple[PremiseTemplate, ...]:
    """Premise templates for decomposing ``conn`` in component ``position``.

    The templates are the canonical CNF of "the argument values give this
    component's value": distribute the disjunction of value tuples, drop
    clauses naming all three values of one argument (true under every
    interpretation), drop subsumed clauses, sort.
    """
    arity = ARITY[conn]
    target = VALUES[position - 1]
    terms = [
        tuple((j, w[j]) for j in range(arity))
        for w in product(VALUES, repeat=arity)
        if apply_connective(conn, w) is target
    ]
    clauses = {frozenset(picks) for picks in product(*terms)}
    clauses = {
        c for c in clauses
        if not any(all((j, v) in c for v in VALUES) for j in range(arity))
    }
    minimal: list[frozenset[Literal]] = []
    for c in sorted(clauses, key=len):
        if not any(kept <= c for kept in minimal):
            minimal.append(c)
    return tuple(sorted(tuple(sorted(c)) for c in minimal))


@dataclass(frozen=True)
class RuleInstance:
    name: str
    principal: Formula
    position: int
    premises: tuple[Sequent3, ...]
    conclusion: Sequent3


def instantiate(conclusion: Sequent3, principal: Formula, position: int) -> RuleInstance:
    """Apply the generated rule for the principal's connective at ``position``."""
    conn = connective(principal)
    if conn is None:
        raise ValueError("cannot decompose an atom")
    args = children(principal)
    base = conclusion.with_component(position, conclusion.component(position) - {principal})
    premises = []
    for template in generate_rules(conn, position):
        s = base
        for j, v in template:
            pos = v.rank + 1
            s = s.with_component(pos, s.component(pos) | {args[j]})
        premises.append(s)
    return RuleInstance(f"{conn}:{position}", principal, position, tuple(premises), conclusion)


# ---------------------------------------------------------------------------
# Proof search


def is_axiom(s: Sequent3) -> bool:
    """Some formula occurs in all three components, so whichever of the three
    values it takes, one component's claim holds."""
    return bool(s.gamma1 & s.gamma2 & s.gamma3)


def select_principal(s: ComponentTriple) -> tuple[Formula, int] | None:
    """Canonically least non-atomic formula and its least position, or None."""
    best = None
    for position in (1, 2, 3):
        for f in s.component(position):
            if isinstance(f, Atom):
                continue
            key = (sort_key(f), position)
            if best is None or key < best[0]:
                best = (key, f, position)
    if best is None:
        return None
    return best[1], best[2]


@dataclass(frozen=True)
class ProofTree:
    conclusion: Sequent3
    rule: str
    premises: tuple["ProofTree", ...] = ()


@dataclass(frozen=True)
class ProofFailure:
    """Search bottomed out at this unprovable atomic sequent."""

    leaf: Sequent3

    def __bool__(self) -> bool:
        return False


def prove(s: Sequent3) -> ProofTree | ProofFailure:
    """Backward proof search.

    Returns a checkable tree, or the atomic leaf witnessing invalidity; rule
    invertibility makes the principal choice irrelevant, so there is no
    backtracking and the same input always yields the same tree.
    """
    memo: dict[Sequent3, ProofTree | ProofFailure] = {}

    def go(s: Sequent3) -> ProofTree | ProofFailure:
        hit = memo.get(s)
        if hit is not None:
            return hit
        if is_axiom(s):
            result: ProofTree | ProofFailure = ProofTree(s, "axiom")
        else:
            selected = select_principal(s)
            if selected is None:
                result = ProofFailure(s)
            else:
                inst = instantiate(s, *selected)
                subproofs = []
                for premise in inst.premises:
                    sub = go(premise)
                    if not sub:
                        memo[s] = sub
                        return sub
                    subproofs.append(sub)
                result = ProofTree(s, inst.name, tuple(subproofs))
        memo[s] = result
        return result

    return go(s)


def entailment_sequent(premises: Iterable[Formula], goal: Formula) -> Sequent3:
    """Entailment as a sequent: with the premises in the f and u components,
    the sequent is valid iff every model of the premises gives the goal t."""
    w = frozenset(premises)
    return Sequent3(w, w, frozenset((goal,)))


def prove_entailment(premises: Iterable[Formula], goal: Formula) -> ProofTree | ProofFailure:
    return prove(entailment_sequent(premises, goal))


def failure_countermodel(failure: ProofFailure, root: Sequent3) -> Interpretation:
    """Counter-interpretation for ``root`` recovered from the failing leaf.

    Decomposition may drop atoms, so the leaf witness is extended with f.
    """
    witness = atomic_countermodel(failure.leaf.components)
    if witness is None:
        raise ValueError("leaf is an axiom, not a failure witness")
    table = witness.as_dict()
    return Interpretation(tuple((name, table.get(name, TruthValue.F)) for name in root.atoms()))


# ---------------------------------------------------------------------------
# Checking


def check_proof(tree: ProofTree, conclusion: Sequent3 | None = None) -> bool:
    """Audit a proof tree without redoing search.

    The root must match ``conclusion`` when given, leaves must be axioms, and
    each inner node's children must be exactly the premises obtained by
    applying the node's named rule to some principal in the named component.
    Shared subtrees (proof search memoises) are verified once.
    """
    if conclusion is not None and tree.conclusion != conclusion:
        return False
    valid: set[int] = set()

    def ok(node: ProofTree) -> bool:
        if id(node) in valid:
            return True
        if node.rule == "axiom":
            good = not node.premises and is_axiom(node.conclusion)
        else:
            good = False
            conn, sep, pos_text = node.rule.partition(":")
            if sep and conn in ARITY and pos_text in {"1", "2", "3"}:
                position = int(pos_text)
                got = tuple(p.conclusion for p in node.premises)
                for f in sorted(node.conclusion.component(position), key=sort_key):
                    if (connective(f) == conn
                            and instantiate(node.conclusion, f, position).premises == got):
                        good = all(ok(p) for p in node.premises)
                        break
        if good:
            valid.add(id(node))
        return good

    return ok(tree)


# ---------------------------------------------------------------------------
# Text and document forms


def print_sequent(s: Sequent3) -> str:
    fields = [", ".join(print_formula(f) for f in sorted(comp, key=sort_key))
              for comp in s.components]
    return "[" + " ; ".join(fields) + "]"


def parse_component_fields(p: TokenParser) -> list[tuple[Formula, ...]]:
    """Three ``;``-separated formula lists followed by ``]``; fields may be empty."""
    comps: list[tuple[Formula, ...]] = []
    for k in range(3):
        if p.peek().kind in (";", "]"):
            comps.append(())
        else:
            comps.append(p.formula_list())
        if k < 2:
            p.expect(";")
    p.expect("]")
    return comps


def parse_sequent(text: str) -> Sequent3:
    """Parse ``[ f1, f2 ; ; g ]``."""
    p = TokenParser(tokenize(text))
    p.expect("[")
    comps = parse_component_fields(p)
    p.expect_end()
    return Sequent3.of(*comps)


def proof_to_doc(tree: ProofTree) -> dict:
    return {
        "rule": tree.rule,
        "sequent": print_sequent(tree.conclusion),
        "premises": [proof_to_doc(p) for p in tree.premises],
    }


def proof_from_doc(doc) -> ProofTree:
    if not isinstance(doc, dict) or not {"rule", "sequent", "premises"} <= set(doc):
        raise ValueError("malformed proof document")
    return ProofTree(
        parse_sequent(doc["sequent"]),
        str(doc["rule"]),
        tuple(proof_from_doc(p) for p in doc["premises"]),
    )
