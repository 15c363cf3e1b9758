"""Model theory of the three-valued base logic.

Truth values are f < u < t with the exact numeric view 0, 1/2, 1.  Negation
is 1 - x, implication is min(1, 1 - x + y), conjunction and disjunction are
min and max.  The modalities have the tables L: (f,u,t) -> (f,f,t) and
M: (f,u,t) -> (f,t,t); they coincide with the definable ~(A -> ~A) and
~A -> A, which the test suite pins down.  Only t is designated, so entailment
means: every interpretation making all premises t makes the goal t.

Everything here works by exhaustive enumeration of interpretations and serves
as ground truth for the sequent and anti-sequent calculi.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from itertools import product
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping

from .syntax import And, Atom, Cert, Formula, Impl, Not, Or, Poss, atoms

if TYPE_CHECKING:  # pragma: no cover
    from .sequent import Sequent3

__all__ = [
    "Interpretation",
    "TruthValue",
    "UndeclaredAtomError",
    "VALUES",
    "Verdict",
    "apply_connective",
    "atomic_countermodel",
    "enumerate_interpretations",
    "evaluate",
    "tt_entails",
    "tt_sequent_true",
    "tt_sequent_valid",
    "tt_valid",
]


class UndeclaredAtomError(LookupError):
    """Evaluation hit an atom outside the interpretation's domain."""

    def __init__(self, atom: str):
        super().__init__(f"undeclared atom: {atom}")
        self.atom = atom


@total_ordering
class TruthValue(Enum):
    F = 0
    U = 1
    T = 2

    def __lt__(self, other):
        if not isinstance(other, TruthValue):
            return NotImplemented
        return self.value < other.value

    @property
    def rank(self) -> int:
        return self.value

    @property
    def num(self) -> Fraction:
        """Exact numeric view: f = 0, u = 1/2, t = 1."""
        return Fraction(self.value, 2)

    @property
    def symbol(self) -> str:
        return self.name.lower()

    @classmethod
    def from_symbol(cls, s: str) -> "TruthValue":
        try:
            return _BY_SYMBOL[s]
        except KeyError:
            raise ValueError(f"not a truth value: {s!r} (expected f, u or t)") from None


#: All values in component order (component 1 is f, 2 is u, 3 is t).
VALUES = (TruthValue.F, TruthValue.U, TruthValue.T)
_BY_SYMBOL = {v.symbol: v for v in VALUES}


def neg(v: TruthValue) -> TruthValue:
    return VALUES[2 - v.rank]


def impl(v: TruthValue, w: TruthValue) -> TruthValue:
    return VALUES[min(2, 2 - v.rank + w.rank)]


def conj(v: TruthValue, w: TruthValue) -> TruthValue:
    return VALUES[min(v.rank, w.rank)]


def disj(v: TruthValue, w: TruthValue) -> TruthValue:
    return VALUES[max(v.rank, w.rank)]


def cert(v: TruthValue) -> TruthValue:
    return TruthValue.T if v is TruthValue.T else TruthValue.F


def poss(v: TruthValue) -> TruthValue:
    return TruthValue.F if v is TruthValue.F else TruthValue.T


_TABLES = {"~": neg, "->": impl, "&": conj, "|": disj, "L": cert, "M": poss}


def apply_connective(conn: str, args: tuple[TruthValue, ...]) -> TruthValue:
    """Look up a connective's truth table."""
    return _TABLES[conn](*args)


@dataclass(frozen=True)
class Interpretation:
    """Total map from a finite atom set to truth values."""

    assignment: tuple[tuple[str, TruthValue], ...]

    def __post_init__(self):
        pairs = tuple(sorted(self.assignment))
        names = [name for name, _ in pairs]
        if len(set(names)) != len(names):
            raise ValueError("duplicate atom in interpretation")
        object.__setattr__(self, "assignment", pairs)
        object.__setattr__(self, "_table", dict(pairs))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, "TruthValue | str"]) -> "Interpretation":
        return cls(tuple(
            (name, v if isinstance(v, TruthValue) else TruthValue.from_symbol(v))
            for name, v in dict(mapping).items()))

    @classmethod
    def of(cls, **values: "TruthValue | str") -> "Interpretation":
        return cls.from_mapping(values)

    @classmethod
    def from_text(cls, text: str) -> "Interpretation":
        """Parse ``a=t,b=u``; blank input is the empty interpretation."""
        text = text.strip()
        if not text:
            return cls(())
        pairs = []
        for part in text.split(","):
            name, eq, value = part.partition("=")
            name, value = name.strip(), value.strip()
            if not eq:
                raise ValueError(f"bad assignment {part.strip()!r} (expected atom=value)")
            Atom(name)  # validates the atom name
            pairs.append((name, TruthValue.from_symbol(value)))
        return cls(tuple(pairs))

    def to_text(self) -> str:
        return ",".join(f"{name}={v.symbol}" for name, v in self.assignment)

    def value(self, atom: str) -> TruthValue:
        try:
            return self._table[atom]  # type: ignore[attr-defined]
        except KeyError:
            raise UndeclaredAtomError(atom) from None

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.assignment)

    def as_dict(self) -> dict[str, TruthValue]:
        return dict(self.assignment)


def evaluate(f: Formula, interp: Interpretation) -> TruthValue:
    """Truth value of ``f`` under ``interp``; every atom of ``f`` must be declared."""
    match f:
        case Atom(name=name):
            return interp.value(name)
        case Not(arg=a):
            return neg(evaluate(a, interp))
        case Cert(arg=a):
            return cert(evaluate(a, interp))
        case Poss(arg=a):
            return poss(evaluate(a, interp))
        case Impl(left=l, right=r):
            return impl(evaluate(l, interp), evaluate(r, interp))
        case And(left=l, right=r):
            return conj(evaluate(l, interp), evaluate(r, interp))
        case Or(left=l, right=r):
            return disj(evaluate(l, interp), evaluate(r, interp))
    raise TypeError(f"not a formula: {f!r}")


def enumerate_interpretations(atom_names: Iterable[str]) -> Iterator[Interpretation]:
    """All 3^n interpretations of the given atoms.

    Deterministic lexicographic order: atoms sorted, values in order
    f < u < t, the last atom varying fastest.
    """
    names = sorted(set(atom_names))
    for combo in product(VALUES, repeat=len(names)):
        yield Interpretation(tuple(zip(names, combo)))


@dataclass(frozen=True)
class Verdict:
    """Yes/no answer of a brute-force check, with the first counterexample."""

    holds: bool
    counter: Interpretation | None = None

    def __bool__(self) -> bool:
        return self.holds


def tt_valid(f: Formula) -> Verdict:
    """Is ``f`` true under every interpretation of its atoms?"""
    for i in enumerate_interpretations(atoms(f)):
        if evaluate(f, i) is not TruthValue.T:
            return Verdict(False, i)
    return Verdict(True)


def tt_entails(premises: Iterable[Formula], goal: Formula) -> Verdict:
    """Does every model making all premises t make the goal t?

    Holds vacuously when the premises are unsatisfiable.
    """
    premises = tuple(premises)
    names = set(atoms(goal))
    for p in premises:
        names.update(atoms(p))
    for i in enumerate_interpretations(names):
        if (all(evaluate(p, i) is TruthValue.T for p in premises)
                and evaluate(goal, i) is not TruthValue.T):
            return Verdict(False, i)
    return Verdict(True)


def tt_sequent_true(sequent: "Sequent3", interp: Interpretation) -> bool:
    """A three-sided sequent is true under ``interp`` when some component
    holds a formula taking that component's value (f, u, t in order)."""
    for value, comp in zip(VALUES, sequent.components):
        for f in comp:
            if evaluate(f, interp) is value:
                return True
    return False


def tt_sequent_valid(sequent: "Sequent3") -> Verdict:
    """Is the sequent true under every interpretation of its atoms?"""
    names: set[str] = set()
    for comp in sequent.components:
        for f in comp:
            names.update(atoms(f))
    for i in enumerate_interpretations(names):
        if not tt_sequent_true(sequent, i):
            return Verdict(False, i)
    return Verdict(True)


def atomic_countermodel(components: tuple) -> Interpretation | None:
    """Falsifying interpretation for an all-atomic sequent, or None when every
    assignment satisfies some component.

    Each atom gets the value of the least component it does not occupy; an
    atom occupying all three components makes the sequent unfalsifiable.
    Raises ValueError when a non-atomic formula is present.
    """
    occupied: dict[str, set[int]] = {}
    for position, comp in enumerate(components, start=1):
        for f in comp:
            if not isinstance(f, Atom):
                raise ValueError(f"non-atomic formula in atomic sequent: {f!r}")
            occupied.setdefault(f.name, set()).add(position)
    out = []
    for name in sorted(occupied):
        free = [p for p in (1, 2, 3) if p not in occupied[name]]
        if not free:
            return None
        out.append((name, VALUES[free[0] - 1]))
    return Interpretation(tuple(out))
