"""Atoms, literals, clauses and CNF formulas.

Atoms are plain strings. Two atoms are the same atom iff their names are equal,
so there is no separate atom class; :func:`check_atom` validates a name.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import EmptyManifestationSet, UnsupportedWidth

Atom = str

_FORBIDDEN_START = ("-", ";", "#")


def check_atom(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise ValueError(f"atom name must be a nonempty string, got {name!r}")
    if any(ch.isspace() for ch in name) or "#" in name or name.startswith(_FORBIDDEN_START):
        raise ValueError(f"invalid atom name {name!r}")
    return name


@dataclass(frozen=True)
class Literal:
    atom: Atom
    positive: bool = True

    def __post_init__(self):
        check_atom(self.atom)

    def negate(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    __neg__ = negate

    def sort_key(self):
        return (self.atom, not self.positive)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    @classmethod
    def parse(cls, token: str) -> "Literal":
        if token.startswith("-"):
            return cls(token[1:], False)
        return cls(token, True)

    def __str__(self):
        return self.atom if self.positive else "-" + self.atom

    def __repr__(self):
        return f"Literal({str(self)!r})"


def pos(atom: Atom) -> Literal:
    return Literal(atom, True)


def neg(atom: Atom) -> Literal:
    return Literal(atom, False)


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals; the empty clause is false."""

    literals: frozenset[Literal] = frozenset()

    @classmethod
    def of(cls, *tokens: str | Literal) -> "Clause":
        return make_clause(t if isinstance(t, Literal) else Literal.parse(t) for t in tokens)

    @property
    def tautological(self) -> bool:
        return any(lit.negate() in self.literals for lit in self.literals)

    @property
    def width(self) -> int:
        return len(self.literals)

    @property
    def atoms(self) -> frozenset[Atom]:
        return frozenset(lit.atom for lit in self.literals)

    def sorted(self) -> tuple[Literal, ...]:
        return tuple(sorted(self.literals, key=Literal.sort_key))

    def sort_key(self):
        return (self.width, tuple(lit.sort_key() for lit in self.sorted()))

    def satisfied_by(self, assignment) -> bool:
        return any(assignment[lit.atom] == lit.positive for lit in self.literals)

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        if not self.literals:
            return "()"
        return " | ".join(str(lit) for lit in self.sorted())


def make_clause(lits: Iterable[Literal]) -> Clause:
    return Clause(frozenset(lits))


def negate_conjunction(atoms: Iterable[Atom]) -> Clause:
    """The clause saying that at least one of ``atoms`` is false."""
    atoms = list(atoms)
    if not atoms:
        raise EmptyManifestationSet("cannot negate an empty conjunction of manifestations")
    return make_clause(neg(a) for a in atoms)


@dataclass(frozen=True)
class CnfFormula:
    """A sequence of clauses over a universe of atoms.

    The universe always contains every atom mentioned by a clause; extra atoms
    may be declared through ``universe``.
    """

    clauses: tuple[Clause, ...] = ()
    universe: frozenset[Atom] = field(default=frozenset())

    def __post_init__(self):
        clauses = tuple(self.clauses)
        universe = set(self.universe)
        for c in clauses:
            if not isinstance(c, Clause):
                raise TypeError(f"expected Clause, got {type(c).__name__}")
            universe.update(c.atoms)
        for a in universe:
            check_atom(a)
        object.__setattr__(self, "clauses", clauses)
        object.__setattr__(self, "universe", frozenset(universe))

    @classmethod
    def _trusted(cls, clauses, universe):
        # clauses are Clause objects whose atoms are all in universe, already checked
        f = object.__new__(cls)
        object.__setattr__(f, "clauses", clauses)
        object.__setattr__(f, "universe", universe)
        return f

    def compiled(self):
        """Sorted atom names and clauses as solver literal codes (cached).

        Atom ``names[i]`` is variable ``i + 1``; tautologies are dropped and
        repeated literals merged.
        """
        cached = self.__dict__.get("_compiled")
        if cached is None:
            names = sorted(self.universe)
            var = {a: i + 1 for i, a in enumerate(names)}
            codes = []
            for c in self.clauses:
                if c.tautological:
                    continue
                codes.append([2 * var[l.atom] + (0 if l.positive else 1) for l in c.literals])
            cached = (names, codes)
            object.__setattr__(self, "_compiled", cached)
        return cached

    @classmethod
    def of(cls, clauses: Iterable[Iterable[str]], universe: Iterable[Atom] = ()) -> "CnfFormula":
        """Build from token lists, e.g. ``CnfFormula.of([["-a", "m"], ["b"]])``."""
        return cls(tuple(Clause.of(*c) for c in clauses), frozenset(universe))

    def with_clauses(self, extra: Iterable[Clause], universe: Iterable[Atom] = ()) -> "CnfFormula":
        extra = tuple(extra)
        new = set(universe)
        for c in extra:
            if not isinstance(c, Clause):
                raise TypeError(f"expected Clause, got {type(c).__name__}")
            new.update(c.atoms)
        new -= self.universe
        for a in new:
            check_atom(a)
        return CnfFormula._trusted(self.clauses + extra, self.universe | new)

    def with_universe(self, atoms: Iterable[Atom]) -> "CnfFormula":
        new = set(atoms) - self.universe
        if not new:
            return self
        for a in new:
            check_atom(a)
        return CnfFormula._trusted(self.clauses, self.universe | new)

    @property
    def max_width(self) -> int:
        return max((c.width for c in self.clauses), default=0)

    def satisfied_by(self, assignment) -> bool:
        return all(c.satisfied_by(assignment) for c in self.clauses)

    def __iter__(self):
        return iter(self.clauses)

    def __len__(self):
        return len(self.clauses)


def fresh_atoms(universe: Iterable[Atom], count: int, prefix: str) -> list[Atom]:
    """``count`` distinct atoms named ``prefix0, prefix1, ...`` avoiding ``universe``."""
    taken = set(universe)
    out = []
    i = 0
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        i += 1
    return out


def fresh_atom(universe: Iterable[Atom], name: str) -> Atom:
    """``name`` itself when free, otherwise the first free ``name<i>``."""
    universe = set(universe)
    if name not in universe:
        return check_atom(name)
    return fresh_atoms(universe, 1, name)[0]


def clause_universe(vars: Sequence[Atom], max_width: int) -> list[Clause]:
    """All non-tautological clauses of width 1..max_width over ``vars``.

    Ordered by width, then lexicographically by canonical literal sequence.
    """
    if not 1 <= max_width <= 3:
        raise UnsupportedWidth(f"clause width must be in 1..3, got {max_width}")
    names = sorted(set(vars))
    out = []
    for k in range(1, max_width + 1):
        for atoms in combinations(names, k):
            for signs in product((True, False), repeat=k):
                out.append(make_clause(Literal(a, s) for a, s in zip(atoms, signs)))
    out.sort(key=Clause.sort_key)
    return out
