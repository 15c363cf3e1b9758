"""Three-valued default logic toolkit.

Formulas of Lukasiewicz three-valued logic, truth-table semantics, a
three-sided sequent calculus for validity, a complementary anti-sequent
calculus for invalidity with countermodel extraction, and a default engine:
extension enumeration plus brave and skeptical queries, all with
machine-checkable certificates.
"""

from .antisequent import (
    AntiSequent3,
    RefutationFailure,
    RefutationTree,
    check_refutation,
    countermodel_of,
    generate_antirules,
    is_antiaxiom,
    parse_antisequent,
    print_antisequent,
    refutation_from_doc,
    refutation_to_doc,
    refute,
)
from .defaults import (
    BraveFailure,
    BraveProof,
    BraveSequent,
    DefaultProof,
    Disposition,
    ExtensionBasis,
    SearchLimitError,
    SignedConstraint,
    SkepticalFailure,
    SkepticalProof,
    SkepticalSequent,
    brave_proof_from_doc,
    brave_proof_to_doc,
    brave_prove,
    brave_translation,
    check_brave_proof,
    check_skeptical_proof,
    constraint_satisfied,
    extensions,
    gamma,
    is_extension,
    member,
    parse_constraints,
    print_constraint,
    skeptical_decide,
    skeptical_proof_from_doc,
    skeptical_proof_to_doc,
)
from .semantics import (
    Interpretation,
    TruthValue,
    UndeclaredAtomError,
    Verdict,
    enumerate_interpretations,
    evaluate,
    tt_entails,
    tt_sequent_true,
    tt_sequent_valid,
    tt_valid,
)
from .sequent import (
    ProofFailure,
    ProofTree,
    RuleInstance,
    Sequent3,
    check_proof,
    entailment_sequent,
    failure_countermodel,
    generate_rules,
    instantiate,
    is_axiom,
    parse_sequent,
    print_sequent,
    proof_from_doc,
    proof_to_doc,
    prove,
    prove_entailment,
)
from .syntax import (
    And,
    Atom,
    Cert,
    Default,
    DefaultTheory,
    DuplicateWarning,
    Formula,
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

__version__ = "0.1.0"

__all__ = [
    "And", "AntiSequent3", "Atom", "BraveFailure", "BraveProof", "BraveSequent",
    "Cert", "Default", "DefaultProof", "DefaultTheory", "Disposition",
    "DuplicateWarning", "ExtensionBasis", "Formula", "Impl", "Interpretation",
    "Not", "Or", "ParseError", "Poss", "ProofFailure", "ProofTree",
    "RefutationFailure", "RefutationTree", "RuleInstance", "SearchLimitError",
    "Sequent3", "SignedConstraint", "SkepticalFailure", "SkepticalProof",
    "SkepticalSequent", "TruthValue", "UndeclaredAtomError", "Verdict",
    "atoms", "brave_proof_from_doc", "brave_proof_to_doc", "brave_prove",
    "brave_translation", "check_brave_proof", "check_proof",
    "check_refutation", "check_skeptical_proof", "constraint_satisfied",
    "countermodel_of", "entailment_sequent", "enumerate_interpretations",
    "evaluate", "extensions", "failure_countermodel", "gamma",
    "generate_antirules", "generate_rules", "instantiate", "is_antiaxiom",
    "is_axiom", "is_extension", "member", "parse_antisequent",
    "parse_constraints", "parse_default", "parse_formula",
    "parse_formula_list", "parse_sequent", "parse_theory", "print_antisequent",
    "print_constraint", "print_default", "print_formula", "print_sequent",
    "proof_from_doc", "proof_to_doc", "prove", "prove_entailment",
    "refutation_from_doc", "refutation_to_doc", "refute", "skeptical_decide",
    "skeptical_proof_from_doc", "skeptical_proof_to_doc", "sort_key",
    "tt_entails", "tt_sequent_true", "tt_sequent_valid", "tt_valid",
]
