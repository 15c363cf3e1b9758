"""Default reasoning over the three-valued base logic.

A default theory pairs facts W with defaults ``A : B1, ..., Bn / C``, read:
if A is derivable and none of ~B1, ..., ~Bn, ~L C are derivable, assert M C
(the conclusion is held possible, not certain).  The firing operator iterates
that reading with the consistency checks made against a fixed context basis;
extensions are its fixed points.  Every fixed point equals the closure of W
plus the M-consequents of its fired defaults, so extension enumeration sweeps
the 2^n fired subsets exhaustively.

Brave queries (is there an extension containing all of Sigma and none of
Theta?) run a disposition search: each default is either fired, with its
prerequisite proved from the basis built so far and its consistency formulas
deferred to final refutation checks, or blocked for a reason that must hold
of the final basis.  Skeptical queries (does every constraint-satisfying
extension contain a goal?) reuse the enumeration.  Both produce certificates
made of sequent proofs and anti-sequent refutations that an independent
checker replays without rerunning any search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable

from .antisequent import AntiSequent3, RefutationFailure, RefutationTree, check_refutation, refute, refutation_from_doc, refutation_to_doc
from .semantics import tt_entails
from .sequent import ProofFailure, ProofTree, check_proof, entailment_sequent, proof_from_doc, proof_to_doc, prove
from .syntax import (
    Cert,
    Default,
    DefaultTheory,
    Formula,
    Not,
    Poss,
    TokenParser,
    parse_default,
    parse_formula,
    print_default,
    print_formula,
    sort_key,
    tokenize,
)

__all__ = [
    "BLOCKED_CERT",
    "BLOCKED_JUST",
    "BLOCKED_PREREQ",
    "BraveFailure",
    "BraveProof",
    "BraveSequent",
    "CandidateRecord",
    "ConstraintEvidence",
    "DEFAULT_MAX_STATES",
    "DefaultProof",
    "Disposition",
    "ExtensionBasis",
    "ExtensionVerdict",
    "FIRED",
    "SearchLimitError",
    "SignedConstraint",
    "SkepticalFailure",
    "SkepticalProof",
    "SkepticalSequent",
    "brave_prove",
    "brave_proof_from_doc",
    "brave_proof_to_doc",
    "brave_translation",
    "candidate_basis",
    "check_brave_proof",
    "check_skeptical_proof",
    "closure_equivalent",
    "constraint_satisfied",
    "extensions",
    "gamma",
    "is_extension",
    "member",
    "parse_constraints",
    "print_constraint",
    "skeptical_decide",
    "skeptical_proof_from_doc",
    "skeptical_proof_to_doc",
]

DEFAULT_MAX_STATES = 10 ** 6


class SearchLimitError(RuntimeError):
    """Brave search exceeded its state budget."""


@dataclass(frozen=True)
class ExtensionBasis:
    """Finite basis (facts plus M-consequents of fired defaults) standing for
    its deductive closure; membership is decided by entailment, never by
    listing."""

    basis: frozenset[Formula]
    fired: tuple[Default, ...] = ()


# ---------------------------------------------------------------------------
# Entailment through the calculi (cached; pure)


@cache
def _proof(basis: frozenset[Formula], goal: Formula) -> ProofTree | ProofFailure:
    return prove(entailment_sequent(basis, goal))


@cache
def _refutation(basis: frozenset[Formula], goal: Formula) -> RefutationTree | RefutationFailure:
    return refute(AntiSequent3.of(basis, basis, (goal,)))


def member(e: ExtensionBasis, f: Formula) -> bool:
    """Is ``f`` in the closure of ``e``?"""
    return bool(_proof(e.basis, f))


def closure_equivalent(b1: frozenset[Formula], b2: frozenset[Formula]) -> bool:
    """Mutual entailment of finite bases, i.e. equality of their closures."""
    return (all(bool(_proof(b2, f)) for f in b1)
            and all(bool(_proof(b1, f)) for f in b2))


def _blocking_formulas(d: Default) -> tuple[Formula, ...]:
    """Formulas whose derivability blocks the default."""
    return tuple(Not(b) for b in d.justifications) + (Not(Cert(d.consequent)),)


def _consistent(context_basis: frozenset[Formula], d: Default) -> bool:
    return all(bool(_refutation(context_basis, f)) for f in _blocking_formulas(d))


# ---------------------------------------------------------------------------
# The firing operator and extensions


def gamma(theory: DefaultTheory, context: ExtensionBasis) -> ExtensionBasis:
    """Least basis closed under firing against the fixed ``context``.

    Starting from the facts, each round fires every default whose
    prerequisite is provable from the basis built so far and whose blocking
    formulas (~Bi and ~L C) are all refutably non-entailed by the context.
    Converges in at most len(defaults) rounds; the fired defaults are
    recorded in firing order.
    """
    admissible = [d for d in theory.defaults if _consistent(context.basis, d)]
    basis = set(theory.facts)
    fired: list[Default] = []
    progress = True
    while progress:
        progress = False
        stage = frozenset(basis)
        for d in admissible:
            if d not in fired and _proof(stage, d.prereq):
                basis.add(Poss(d.consequent))
                fired.append(d)
                progress = True
    return ExtensionBasis(frozenset(basis), tuple(fired))


def is_extension(theory: DefaultTheory, candidate: ExtensionBasis) -> bool:
    """Fixed-point test: firing against the candidate reproduces its closure."""
    return closure_equivalent(gamma(theory, candidate).basis, candidate.basis)


def candidate_basis(theory: DefaultTheory, subset: Iterable[Default]) -> frozenset[Formula]:
    return frozenset(theory.facts) | {Poss(d.consequent) for d in subset}


@dataclass(frozen=True)
class CandidateRecord:
    """One line of the enumeration transcript."""

    rank: int
    fired_indices: tuple[int, ...]
    kept: bool


def _enumerate_candidates(theory: DefaultTheory) -> tuple[list[ExtensionBasis], list[CandidateRecord]]:
    kept: list[ExtensionBasis] = []
    transcript: list[CandidateRecord] = []
    n = len(theory.defaults)
    for rank in range(1 << n):
        indices = tuple(i for i in range(n) if rank >> i & 1)
        subset = tuple(theory.defaults[i] for i in indices)
        cand = ExtensionBasis(candidate_basis(theory, subset), subset)
        g = gamma(theory, cand)
        ok = (set(g.fired) == set(subset)
              and closure_equivalent(g.basis, cand.basis)
              and not any(closure_equivalent(g.basis, e.basis) for e in kept))
        transcript.append(CandidateRecord(rank, indices, ok))
        if ok:
            kept.append(g)
    return kept, transcript


def extensions(theory: DefaultTheory) -> tuple[ExtensionBasis, ...]:
    """All extensions, in candidate-rank order, deduplicated up to mutual
    entailment.

    A candidate (facts plus the M-consequents of a fired subset) is kept when
    the operator reproduces its closure with exactly that fired set.
    """
    kept, _ = _enumerate_candidates(theory)
    return tuple(kept)


# ---------------------------------------------------------------------------
# Queries and constraints


@dataclass(frozen=True)
class BraveSequent:
    """Gamma; Delta |- Sigma; Theta: true when some extension of the theory
    (Gamma, Delta) contains every Sigma formula and no Theta formula."""

    gamma: frozenset[Formula]
    delta: tuple[Default, ...]
    sigma: frozenset[Formula]
    theta: frozenset[Formula]


@dataclass(frozen=True)
class SignedConstraint:
    """Membership constraint on extensions: +f requires f, -f forbids it."""

    positive: bool
    formula: Formula


@dataclass(frozen=True)
class SkepticalSequent:
    """Sigma; Gamma; Delta |- Theta: true when every extension of the theory
    (Gamma, Delta) satisfying the constraints Sigma contains at least one
    Theta formula."""

    sigma: frozenset[SignedConstraint]
    gamma: frozenset[Formula]
    delta: tuple[Default, ...]
    theta: frozenset[Formula]


def constraint_satisfied(e: ExtensionBasis, c: SignedConstraint) -> bool:
    return member(e, c.formula) == c.positive


def parse_constraints(text: str) -> tuple[SignedConstraint, ...]:
    """Comma-separated ``+formula`` / ``-formula``; a bare formula is positive."""
    p = TokenParser(tokenize(text))
    if p.at_end():
        return ()
    out = []
    while True:
        positive = not p.accept("-")
        if positive:
            p.accept("+")
        out.append(SignedConstraint(positive, p.formula()))
        if not p.accept(","):
            break
    p.expect_end()
    return tuple(out)


def print_constraint(c: SignedConstraint) -> str:
    return ("+" if c.positive else "-") + print_formula(c.formula)


def _constraint_key(c: SignedConstraint):
    return (0 if c.positive else 1, sort_key(c.formula))


def brave_translation(query: SkepticalSequent) -> BraveSequent:
    """Failure dual of a skeptical sequent: the skeptical sequent holds exactly
    when this brave sequent (some extension meets every positive constraint
    while avoiding the negative constraints and all goals) is underivable."""
    positive = frozenset(c.formula for c in query.sigma if c.positive)
    negative = frozenset(c.formula for c in query.sigma if not c.positive)
    return BraveSequent(query.gamma, query.delta, positive, negative | query.theta)


# ---------------------------------------------------------------------------
# Brave search

FIRED = "fired"
BLOCKED_PREREQ = "blocked-prerequisite"
BLOCKED_JUST = "blocked-justification"
BLOCKED_CERT = "blocked-consequent-certainty"


@dataclass(frozen=True)
class Disposition:
    """How the search settled one default."""

    default: Default
    kind: str
    justification_index: int | None = None  # 1-based, blocked-justification only
    groundedness: ProofTree | None = None  # prerequisite proof, fired only


@dataclass(frozen=True)
class BraveProof:
    query: BraveSequent
    steps: tuple[Disposition, ...]
    final_basis: frozenset[Formula]
    sigma_proofs: tuple[tuple[Formula, ProofTree], ...]
    theta_refutations: tuple[tuple[Formula, RefutationTree], ...]


@dataclass(frozen=True)
class BraveFailure:
    query: BraveSequent
    states: int

    def __bool__(self) -> bool:
        return False


def brave_prove(query: BraveSequent, max_states: int = DEFAULT_MAX_STATES) -> BraveProof | BraveFailure:
    """Disposition search for the brave condition.

    Firing requires the prerequisite to be provable from facts plus the
    consequents fired so far, so firing order matters and orders are explored
    exhaustively; states are memoised on (basis, remaining defaults, Sigma,
    Theta), which fully determines the residual problem.  Blocking moves
    record the reason as an obligation: the prerequisite (or, for fired
    defaults, every ~Bi and ~L C) joins the final refutation checks, a
    justification negation or ~L C joins the final proof checks.
    Deterministic exploration order makes the returned certificate canonical.
    """
    visited: set = set()
    states = 0

    def end_checks(basis, sigma, theta):
        sigma_proofs = []
        for f in sorted(sigma, key=sort_key):
            proof = _proof(basis, f)
            if not proof:
                return None
            sigma_proofs.append((f, proof))
        theta_refutations = []
        for f in sorted(theta, key=sort_key):
            refutation = _refutation(basis, f)
            if not refutation:
                return None
            theta_refutations.append((f, refutation))
        return tuple(sigma_proofs), tuple(theta_refutations)

    def search(remaining, basis, sigma, theta, steps):
        nonlocal states
        states += 1
        if states > max_states:
            raise SearchLimitError(f"brave search exceeded {max_states} states")
        key = (frozenset(remaining), basis, sigma, theta)
        if key in visited:
            return None
        visited.add(key)
        if not remaining:
            checks = end_checks(basis, sigma, theta)
            if checks is None:
                return None
            return BraveProof(query, steps, basis, checks[0], checks[1])
        for idx in remaining:
            d = query.delta[idx]
            rest = tuple(i for i in remaining if i != idx)
            proof = _proof(basis, d.prereq)
            if proof:
                found = search(rest, basis | {Poss(d.consequent)}, sigma,
                               theta | set(_blocking_formulas(d)),
                               steps + (Disposition(d, FIRED, groundedness=proof),))
                if found is not None:
                    return found
            found = search(rest, basis, sigma, theta | {d.prereq},
                           steps + (Disposition(d, BLOCKED_PREREQ),))
            if found is not None:
                return found
            for j, b in enumerate(d.justifications, start=1):
                found = search(rest, basis, sigma | {Not(b)}, theta,
                               steps + (Disposition(d, BLOCKED_JUST, justification_index=j),))
                if found is not None:
                    return found
            found = search(rest, basis, sigma | {Not(Cert(d.consequent))}, theta,
                           steps + (Disposition(d, BLOCKED_CERT),))
            if found is not None:
                return found
        return None

    result = search(tuple(range(len(query.delta))), frozenset(query.gamma),
                    frozenset(query.sigma), frozenset(query.theta), ())
    return result if result is not None else BraveFailure(query, states)


# ---------------------------------------------------------------------------
# Skeptical decision


@dataclass(frozen=True)
class ConstraintEvidence:
    """Entailment or non-entailment evidence for one constraint against one
    extension; exactly one of proof/refutation is present."""

    constraint: SignedConstraint
    satisfied: bool
    proof: ProofTree | None = None
    refutation: RefutationTree | None = None


@dataclass(frozen=True)
class ExtensionVerdict:
    extension: ExtensionBasis
    fired_indices: tuple[int, ...]
    evidence: tuple[ConstraintEvidence, ...]
    satisfies_constraints: bool
    goal: Formula | None = None
    goal_proof: ProofTree | None = None


@dataclass(frozen=True)
class SkepticalProof:
    query: SkepticalSequent
    transcript: tuple[CandidateRecord, ...]
    verdicts: tuple[ExtensionVerdict, ...]


@dataclass(frozen=True)
class SkepticalFailure:
    query: SkepticalSequent
    counterexample: ExtensionBasis | None

    def __bool__(self) -> bool:
        return False


def _constraint_evidence(e: ExtensionBasis, c: SignedConstraint) -> ConstraintEvidence:
    proof = _proof(e.basis, c.formula)
    if proof:
        return ConstraintEvidence(c, satisfied=c.positive, proof=proof)
    refutation = _refutation(e.basis, c.formula)
    return ConstraintEvidence(c, satisfied=not c.positive,
                              refutation=refutation if refutation else None)


def skeptical_decide(query: SkepticalSequent) -> SkepticalProof | SkepticalFailure:
    """Check every constraint-satisfying extension for a goal.

    Succeeds when each such extension entails some Theta formula; the
    certificate carries the full candidate transcript, per-extension
    constraint evidence, and one goal proof per satisfying extension.  Fails
    with the first counterexample extension otherwise (in particular, an
    empty Theta fails as soon as any extension satisfies the constraints).
    """
    theory = DefaultTheory(query.gamma, query.delta)
    kept, transcript = _enumerate_candidates(theory)
    index_of = {d: i for i, d in enumerate(query.delta)}
    verdicts = []
    for e in kept:
        evidence = tuple(_constraint_evidence(e, c)
                         for c in sorted(query.sigma, key=_constraint_key))
        satisfied = all(ev.satisfied for ev in evidence)
        goal = goal_proof = None
        if satisfied:
            for f in sorted(query.theta, key=sort_key):
                proof = _proof(e.basis, f)
                if proof:
                    goal, goal_proof = f, proof
                    break
            if goal is None:
                return SkepticalFailure(query, e)
        verdicts.append(ExtensionVerdict(
            e, tuple(index_of[d] for d in e.fired), evidence, satisfied, goal, goal_proof))
    return SkepticalProof(query, tuple(transcript), tuple(verdicts))


DefaultProof = BraveProof | SkepticalProof


# ---------------------------------------------------------------------------
# Certificate checking


def check_brave_proof(proof: BraveProof) -> bool:
    """Replay the dispositions and re-verify every embedded certificate.

    No search is rerun: groundedness proofs are checked against the replayed
    basis at their step, and the final proof/refutation obligations must
    cover exactly the accumulated Sigma and Theta.
    """
    q = proof.query
    remaining = list(q.delta)
    basis = frozenset(q.gamma)
    sigma = set(q.sigma)
    theta = set(q.theta)
    for step in proof.steps:
        d = step.default
        if d not in remaining:
            return False
        remaining.remove(d)
        if step.kind == FIRED:
            t = step.groundedness
            if step.justification_index is not None or t is None:
                return False
            if not check_proof(t, entailment_sequent(basis, d.prereq)):
                return False
            basis |= {Poss(d.consequent)}
            theta |= set(_blocking_formulas(d))
        elif step.kind == BLOCKED_PREREQ:
            if step.groundedness is not None or step.justification_index is not None:
                return False
            theta.add(d.prereq)
        elif step.kind == BLOCKED_JUST:
            j = step.justification_index
            if step.groundedness is not None or j is None or not 1 <= j <= len(d.justifications):
                return False
            sigma.add(Not(d.justifications[j - 1]))
        elif step.kind == BLOCKED_CERT:
            if step.groundedness is not None or step.justification_index is not None:
                return False
            sigma.add(Not(Cert(d.consequent)))
        else:
            return False
    if remaining or proof.final_basis != basis:
        return False
    if {f for f, _ in proof.sigma_proofs} != sigma:
        return False
    if {f for f, _ in proof.theta_refutations} != theta:
        return False
    for f, t in proof.sigma_proofs:
        if not check_proof(t, entailment_sequent(basis, f)):
            return False
    for f, r in proof.theta_refutations:
        if not check_refutation(r, AntiSequent3.of(basis, basis, (f,))):
            return False
    return True


@cache
def _sem_entailed(basis: frozenset[Formula], f: Formula) -> bool:
    return bool(tt_entails(basis, f))


def _sem_equivalent(b1: frozenset[Formula], b2: frozenset[Formula]) -> bool:
    return (all(_sem_entailed(b2, f) for f in b1)
            and all(_sem_entailed(b1, f) for f in b2))


@cache
def _semantic_candidates(theory: DefaultTheory) -> tuple[tuple[int, tuple[int, ...], bool, frozenset[Formula]], ...]:
    """Candidate sweep with truth-table entailment instead of proof search;
    used only to audit skeptical certificates."""
    out = []
    kept_bases: list[frozenset[Formula]] = []
    n = len(theory.defaults)
    for rank in range(1 << n):
        indices = tuple(i for i in range(n) if rank >> i & 1)
        subset = tuple(theory.defaults[i] for i in indices)
        cbasis = candidate_basis(theory, subset)
        fired, gbasis = _semantic_gamma(theory, cbasis)
        kept = (fired == set(subset)
                and _sem_equivalent(gbasis, cbasis)
                and not any(_sem_equivalent(kb, cbasis) for kb in kept_bases))
        if kept:
            kept_bases.append(cbasis)
        out.append((rank, indices, kept, cbasis))
    return tuple(out)


def _semantic_gamma(theory: DefaultTheory, context_basis: frozenset[Formula]):
    admissible = [d for d in theory.defaults
                  if not any(_sem_entailed(context_basis, f) for f in _blocking_formulas(d))]
    basis = set(theory.facts)
    fired: list[Default] = []
    progress = True
    while progress:
        progress = False
        stage = frozenset(basis)
        for d in admissible:
            if d not in fired and _sem_entailed(stage, d.prereq):
                basis.add(Poss(d.consequent))
                fired.append(d)
                progress = True
    return set(fired), frozenset(basis)


def check_skeptical_proof(proof: SkepticalProof) -> bool:
    """Audit a skeptical certificate against the semantics.

    The extension set is recomputed by truth tables (no proof search), the
    transcript and verdict list must match it, every piece of constraint
    evidence must be a valid proof or refutation of the right conclusion, and
    each satisfying extension must carry a valid goal proof.
    """
    q = proof.query
    try:
        theory = DefaultTheory(q.gamma, q.delta)
    except ValueError:
        return False
    expected = _semantic_candidates(theory)
    if len(proof.transcript) != len(expected):
        return False
    kept_bases = []
    for record, (rank, indices, kept, cbasis) in zip(proof.transcript, expected):
        if record.rank != rank or record.fired_indices != indices or record.kept != kept:
            return False
        if kept:
            kept_bases.append((indices, cbasis))
    if len(proof.verdicts) != len(kept_bases):
        return False
    expected_constraints = tuple(sorted(q.sigma, key=_constraint_key))
    for verdict, (indices, basis) in zip(proof.verdicts, kept_bases):
        if verdict.extension.basis != basis or verdict.fired_indices != indices:
            return False
        if tuple(ev.constraint for ev in verdict.evidence) != expected_constraints:
            return False
        for ev in verdict.evidence:
            entailed = _sem_entailed(basis, ev.constraint.formula)
            if ev.satisfied != (entailed == ev.constraint.positive):
                return False
            if entailed:
                if ev.proof is None or ev.refutation is not None:
                    return False
                if not check_proof(ev.proof, entailment_sequent(basis, ev.constraint.formula)):
                    return False
            else:
                if ev.refutation is None or ev.proof is not None:
                    return False
                if not check_refutation(ev.refutation, AntiSequent3.of(basis, basis, (ev.constraint.formula,))):
                    return False
        if verdict.satisfies_constraints != all(ev.satisfied for ev in verdict.evidence):
            return False
        if verdict.satisfies_constraints:
            if verdict.goal is None or verdict.goal not in q.theta:
                return False
            if not _sem_entailed(basis, verdict.goal):
                return False
            if verdict.goal_proof is None or not check_proof(
                    verdict.goal_proof, entailment_sequent(basis, verdict.goal)):
                return False
        elif verdict.goal is not None or verdict.goal_proof is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# Document forms


def _formula_list_doc(formulas: Iterable[Formula]) -> list[str]:
    return [print_formula(f) for f in sorted(formulas, key=sort_key)]


def brave_proof_to_doc(proof: BraveProof) -> dict:
    q = proof.query
    steps = []
    for step in proof.steps:
        doc: dict = {"default": print_default(step.default), "disposition": step.kind}
        if step.justification_index is not None:
            doc["justification"] = step.justification_index
        if step.groundedness is not None:
            doc["groundedness"] = proof_to_doc(step.groundedness)
        steps.append(doc)
    return {
        "kind": "brave",
        "query": {
            "gamma": _formula_list_doc(q.gamma),
            "delta": [print_default(d) for d in q.delta],
            "sigma": _formula_list_doc(q.sigma),
            "theta": _formula_list_doc(q.theta),
        },
        "steps": steps,
        "basis": _formula_list_doc(proof.final_basis),
        "sigma_proofs": [{"formula": print_formula(f), "proof": proof_to_doc(t)}
                         for f, t in proof.sigma_proofs],
        "theta_refutations": [{"formula": print_formula(f), "refutation": refutation_to_doc(r)}
                              for f, r in proof.theta_refutations],
    }


def brave_proof_from_doc(doc) -> BraveProof:
    if not isinstance(doc, dict) or doc.get("kind") != "brave":
        raise ValueError("malformed brave certificate")
    qd = doc["query"]
    delta = tuple(parse_default(t) for t in qd["delta"])
    query = BraveSequent(
        frozenset(parse_formula(t) for t in qd["gamma"]),
        delta,
        frozenset(parse_formula(t) for t in qd["sigma"]),
        frozenset(parse_formula(t) for t in qd["theta"]),
    )
    steps = []
    for sd in doc["steps"]:
        steps.append(Disposition(
            parse_default(sd["default"]),
            str(sd["disposition"]),
            justification_index=sd.get("justification"),
            groundedness=proof_from_doc(sd["groundedness"]) if "groundedness" in sd else None,
        ))
    return BraveProof(
        query,
        tuple(steps),
        frozenset(parse_formula(t) for t in doc["basis"]),
        tuple((parse_formula(e["formula"]), proof_from_doc(e["proof"]))
              for e in doc["sigma_proofs"]),
        tuple((parse_formula(e["formula"]), refutation_from_doc(e["refutation"]))
              for e in doc["theta_refutations"]),
    )


def skeptical_proof_to_doc(proof: SkepticalProof) -> dict:
    q = proof.query
    verdicts = []
    for v in proof.verdicts:
        evidence = []
        for ev in v.evidence:
            ed: dict = {"constraint": print_constraint(ev.constraint), "satisfied": ev.satisfied}
            if ev.proof is not None:
                ed["proof"] = proof_to_doc(ev.proof)
            if ev.refutation is not None:
                ed["refutation"] = refutation_to_doc(ev.refutation)
            evidence.append(ed)
        vd: dict = {
            "basis": _formula_list_doc(v.extension.basis),
            "fired": list(v.fired_indices),
            "constraints": evidence,
            "satisfies_constraints": v.satisfies_constraints,
        }
        if v.goal is not None:
            vd["goal"] = print_formula(v.goal)
            vd["goal_proof"] = proof_to_doc(v.goal_proof)
        verdicts.append(vd)
    return {
        "kind": "skeptical",
        "query": {
            "constraints": [print_constraint(c) for c in sorted(q.sigma, key=_constraint_key)],
            "gamma": _formula_list_doc(q.gamma),
            "delta": [print_default(d) for d in q.delta],
            "theta": _formula_list_doc(q.theta),
        },
        "transcript": [{"rank": r.rank, "fired": list(r.fired_indices), "kept": r.kept}
                       for r in proof.transcript],
        "extensions": verdicts,
    }


def skeptical_proof_from_doc(doc) -> SkepticalProof:
    if not isinstance(doc, dict) or doc.get("kind") != "skeptical":
        raise ValueError("malformed skeptical certificate")
    qd = doc["query"]
    delta = tuple(parse_default(t) for t in qd["delta"])
    constraints = []
    for t in qd["constraints"]:
        parsed = parse_constraints(t)
        if len(parsed) != 1:
            raise ValueError("malformed constraint entry")
        constraints.append(parsed[0])
    query = SkepticalSequent(
        frozenset(constraints),
        frozenset(parse_formula(t) for t in qd["gamma"]),
        delta,
        frozenset(parse_formula(t) for t in qd["theta"]),
    )
    transcript = tuple(CandidateRecord(r["rank"], tuple(r["fired"]), bool(r["kept"]))
                       for r in doc["transcript"])
    verdicts = []
    for vd in doc["extensions"]:
        fired_indices = tuple(vd["fired"])
        ext = ExtensionBasis(
            frozenset(parse_formula(t) for t in vd["basis"]),
            tuple(delta[i] for i in fired_indices),
        )
        evidence = []
        for ed in vd["constraints"]:
            parsed = parse_constraints(ed["constraint"])
            if len(parsed) != 1:
                raise ValueError("malformed constraint entry")
            evidence.append(ConstraintEvidence(
                parsed[0],
                bool(ed["satisfied"]),
                proof=proof_from_doc(ed["proof"]) if "proof" in ed else None,
                refutation=refutation_from_doc(ed["refutation"]) if "refutation" in ed else None,
            ))
        verdicts.append(ExtensionVerdict(
            ext,
            fired_indices,
            tuple(evidence),
            bool(vd["satisfies_constraints"]),
            goal=parse_formula(vd["goal"]) if "goal" in vd else None,
            goal_proof=proof_from_doc(vd["goal_proof"]) if "goal_proof" in vd else None,
        ))
    return SkepticalProof(query, transcript, tuple(verdicts))
