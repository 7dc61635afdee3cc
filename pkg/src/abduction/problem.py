"""Abduction problems, orderings and given-solution lists."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import InvalidGiven, InvalidProblem, UnknownAtom
from .logic import Atom, CnfFormula

HypothesisSet = frozenset


class Ordering(str, Enum):
    NONE = "none"
    SUBSET = "subset"
    CARDINALITY = "cardinality"

    @classmethod
    def parse(cls, text: "str | Ordering") -> "Ordering":
        if isinstance(text, Ordering):
            return text
        aliases = {"card": cls.CARDINALITY, "cardinality": cls.CARDINALITY,
                   "subset": cls.SUBSET, "none": cls.NONE}
        try:
            return aliases[text]
        except KeyError:
            raise ValueError(f"unknown ordering {text!r}") from None

    def precedes(self, a: frozenset, b: frozenset) -> bool:
        """``a`` is at least as preferred as ``b``."""
        if self is Ordering.SUBSET:
            return a <= b
        if self is Ordering.CARDINALITY:
            return len(a) <= len(b)
        return True

    def strictly_precedes(self, a: frozenset, b: frozenset) -> bool:
        if self is Ordering.SUBSET:
            return a < b
        if self is Ordering.CARDINALITY:
            return len(a) < len(b)
        return False


@dataclass(frozen=True)
class AbductionProblem:
    """The triple (hypotheses, manifestations, theory).

    The theory's universe is extended with every hypothesis and manifestation
    atom on construction. Construction never rejects a problem; call
    :func:`validate_problem` for diagnostics.
    """

    hypotheses: frozenset[Atom]
    manifestations: frozenset[Atom]
    theory: CnfFormula = CnfFormula()

    def __post_init__(self):
        h = frozenset(self.hypotheses)
        m = frozenset(self.manifestations)
        object.__setattr__(self, "hypotheses", h)
        object.__setattr__(self, "manifestations", m)
        object.__setattr__(self, "theory", self.theory.with_universe(h | m))

    @classmethod
    def of(cls, hypotheses: Iterable[Atom], manifestations: Iterable[Atom],
           clauses: Iterable[Iterable[str]] = ()) -> "AbductionProblem":
        """Shorthand: ``AbductionProblem.of("ab", ["m"], [["-a", "m"]])``."""
        return cls(frozenset(hypotheses), frozenset(manifestations), CnfFormula.of(clauses))

    @property
    def universe(self) -> frozenset[Atom]:
        return self.theory.universe

    @property
    def auxiliary(self) -> frozenset[Atom]:
        """Atoms that are neither hypotheses nor manifestations."""
        return self.universe - self.hypotheses - self.manifestations

    def hypothesis_set(self, members: Iterable[Atom]) -> frozenset[Atom]:
        """Check ``members`` against the hypotheses and return them as a frozenset."""
        s = frozenset(members)
        extra = s - self.hypotheses
        if extra:
            raise UnknownAtom(f"not hypotheses of the problem: {', '.join(sorted(extra))}")
        return s


def validate_problem(p: AbductionProblem) -> list[str]:
    """Diagnostics for every violated invariant; empty when the problem is well formed."""
    out = []
    overlap = p.hypotheses & p.manifestations
    if overlap:
        out.append(f"H and M overlap on {' '.join(sorted(overlap))}")
    if not p.manifestations:
        out.append("M empty")
    return out


def require_valid(p: AbductionProblem) -> None:
    problems = validate_problem(p)
    if problems:
        raise InvalidProblem("; ".join(problems))


def as_given(p: AbductionProblem, given: Iterable[Iterable[Atom]]) -> tuple[frozenset[Atom], ...]:
    """Normalize a given-solution list: order kept, members checked, duplicates rejected."""
    out = []
    seen = set()
    for g in given:
        g = p.hypothesis_set(g)
        if g in seen:
            raise InvalidGiven(f"duplicate given set {{{', '.join(sorted(g))}}}")
        seen.add(g)
        out.append(g)
    return tuple(out)


def sort_key(h: Iterable[Atom]) -> tuple[str, ...]:
    """Tie-breaking key: the sorted tuple of member names."""
    return tuple(sorted(h))


def format_set(h: Iterable[Atom]) -> str:
    names = sorted(h)
    return " ".join(names) if names else "<empty>"
