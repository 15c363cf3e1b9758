"""Certificate mutators: every yielded mutant corrupts exactly one node in a
way the independent checkers are required to reject."""

from __future__ import annotations

from dataclasses import replace
from typing import Iterator

from luk3.antisequent import RefutationTree
from luk3.defaults import BLOCKED_PREREQ, FIRED, BraveProof, Disposition, SkepticalProof
from luk3.sequent import ProofTree
from luk3.syntax import Atom

_MUT = Atom("zz_mut")


def _bump(triple):
    return triple.with_component(1, triple.component(1) | {_MUT})


def proof_mutants(tree: ProofTree) -> Iterator[ProofTree]:
    """Mutants bumping one node's conclusion with a fresh atom.

    Proof search memoises, so equal subtrees are shared objects; a deep
    mutation is re-tested only along the first path to its subtree (rejection
    happens at the mutated node's immediate parent, which is path-independent),
    while the subtree's own root bump is emitted for every distinct edge.
    """
    seen: set[int] = set()

    def walk(node: ProofTree, descend: bool) -> Iterator[ProofTree]:
        yield replace(node, conclusion=_bump(node.conclusion))
        if not descend:
            return
        for i, p in enumerate(node.premises):
            first = id(p) not in seen
            seen.add(id(p))
            for m in walk(p, first):
                yield replace(node, premises=node.premises[:i] + (m,) + node.premises[i + 1:])

    yield from walk(tree, True)


def refutation_mutants(tree: RefutationTree) -> Iterator[RefutationTree]:
    yield replace(tree, conclusion=_bump(tree.conclusion))
    if tree.premise is not None:
        for m in refutation_mutants(tree.premise):
            yield replace(tree, premise=m)


def brave_mutants(proof: BraveProof) -> Iterator[BraveProof]:
    for i, step in enumerate(proof.steps):
        flipped_kind = BLOCKED_PREREQ if step.kind == FIRED else FIRED
        flipped = Disposition(step.default, flipped_kind,
                              justification_index=None,
                              groundedness=step.groundedness)
        yield replace(proof, steps=proof.steps[:i] + (flipped,) + proof.steps[i + 1:])
        yield replace(proof, steps=proof.steps[:i] + proof.steps[i + 1:])  # dropped step
        if step.groundedness is not None:
            for m in proof_mutants(step.groundedness):
                mutated = replace(step, groundedness=m)
                yield replace(proof, steps=proof.steps[:i] + (mutated,) + proof.steps[i + 1:])
    yield replace(proof, final_basis=proof.final_basis | {_MUT})
    for i, (f, t) in enumerate(proof.sigma_proofs):
        yield replace(proof, sigma_proofs=proof.sigma_proofs[:i] + ((_MUT, t),)
                      + proof.sigma_proofs[i + 1:])
        for m in proof_mutants(t):
            yield replace(proof, sigma_proofs=proof.sigma_proofs[:i] + ((f, m),)
                          + proof.sigma_proofs[i + 1:])
    for i, (f, r) in enumerate(proof.theta_refutations):
        yield replace(proof, theta_refutations=proof.theta_refutations[:i] + ((_MUT, r),)
                      + proof.theta_refutations[i + 1:])
        for m in refutation_mutants(r):
            yield replace(proof, theta_refutations=proof.theta_refutations[:i] + ((f, m),)
                          + proof.theta_refutations[i + 1:])


def skeptical_mutants(proof: SkepticalProof) -> Iterator[SkepticalProof]:
    for i, record in enumerate(proof.transcript):
        flipped = replace(record, kept=not record.kept)
        yield replace(proof, transcript=proof.transcript[:i] + (flipped,)
                      + proof.transcript[i + 1:])
    for i, verdict in enumerate(proof.verdicts):
        def swap(v):
            return replace(proof, verdicts=proof.verdicts[:i] + (v,) + proof.verdicts[i + 1:])

        bumped = replace(verdict, extension=replace(
            verdict.extension, basis=verdict.extension.basis | {_MUT}))
        yield swap(bumped)
        yield swap(replace(verdict, satisfies_constraints=not verdict.satisfies_constraints))
        for j, ev in enumerate(verdict.evidence):
            yield swap(replace(verdict, evidence=verdict.evidence[:j]
                               + (replace(ev, satisfied=not ev.satisfied),)
                               + verdict.evidence[j + 1:]))
            if ev.proof is not None:
                for m in proof_mutants(ev.proof):
                    yield swap(replace(verdict, evidence=verdict.evidence[:j]
                                       + (replace(ev, proof=m),) + verdict.evidence[j + 1:]))
            if ev.refutation is not None:
                for m in refutation_mutants(ev.refutation):
                    yield swap(replace(verdict, evidence=verdict.evidence[:j]
                                       + (replace(ev, refutation=m),) + verdict.evidence[j + 1:]))
        if verdict.goal is not None:
            yield swap(replace(verdict, goal=_MUT))
            for m in proof_mutants(verdict.goal_proof):
                yield swap(replace(verdict, goal_proof=m))
