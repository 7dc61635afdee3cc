"""Exhaustive reference semantics: truth tables and full subset enumeration.

Deliberately shares no code with the SAT oracle or the search engine; only
the data types are common.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import TooManyHypotheses, UniverseTooLarge
from .logic import Atom, Clause, CnfFormula, negate_conjunction
from .problem import AbductionProblem, Ordering

MAX_UNIVERSE = 24
MAX_HYPOTHESES = 16
_CHUNK = 1 << 20
_WHOLE_TABLE = 16


def models(f: CnfFormula, atoms: Iterable[Atom] | None = None) -> tuple[list[Atom], np.ndarray]:
    """All satisfying assignments of ``f`` as bit masks over ``atoms`` (sorted).

    Bit ``i`` of a mask is the value of the ``i``-th atom.
    """
    names = sorted(set(f.universe) | set(atoms or ()))
    n = len(names)
    if n > MAX_UNIVERSE:
        raise UniverseTooLarge(f"{n} atoms exceed the truth-table limit of {MAX_UNIVERSE}")
    bit = {a: i for i, a in enumerate(names)}
    clauses = [[(bit[l.atom], l.positive) for l in c.literals] for c in f.clauses]
    total = 1 << n
    found = []
    for start in range(0, total, _CHUNK):
        rows = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        ok = np.ones(rows.shape, dtype=bool)
        for c in clauses:
            sat = np.zeros(rows.shape, dtype=bool)
            for i, positive in c:
                v = ((rows >> i) & 1).astype(bool)
                sat |= v if positive else ~v
            ok &= sat
            if not ok.any():
                break
        found.append(rows[ok])
    return names, np.concatenate(found) if found else np.zeros(0, dtype=np.int64)


def _mask(names, atoms):
    bit = {a: i for i, a in enumerate(names)}
    m = 0
    for a in atoms:
        m |= 1 << bit[a]
    return m


def bf_satisfiable(f: CnfFormula) -> bool:
    return models(f)[1].size > 0


def bf_entails(t: CnfFormula, hyps: Iterable[Atom], ms: Iterable[Atom]) -> bool:
    """Every model of ``t`` making ``hyps`` true makes ``ms`` true (vacuous when none)."""
    hyps, ms = list(hyps), list(ms)
    names, rows = models(t, hyps + ms)
    hm, mm = _mask(names, hyps), _mask(names, ms)
    rows = rows[(rows & hm) == hm]
    return bool(np.all((rows & mm) == mm))


def _subsets(items):
    for k in range(len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


def _fixed_residue(clauses, fixed):
    """Clauses left after setting ``fixed`` atoms true, then unit propagation,
    dropping tautologies and dropping clauses with a pure literal.
    Satisfiability is unchanged."""
    value = {a: True for a in fixed}
    rest = [c.literals for c in clauses if not c.tautological]
    while True:
        reduced = []
        for c in rest:
            if any(value.get(l.atom) == l.positive for l in c):
                continue
            reduced.append(frozenset(l for l in c if l.atom not in value))
        units = [next(iter(c)) for c in reduced if len(c) == 1]
        seen = {}
        for c in reduced:
            for l in c:
                seen.setdefault(l.atom, set()).add(l.positive)
        pure = {a: next(iter(signs)) for a, signs in seen.items() if len(signs) == 1}
        if frozenset() in reduced:
            return CnfFormula((Clause(),))
        if not (units or pure):
            return CnfFormula(tuple(Clause(c) for c in reduced))
        for l in units:
            if value.setdefault(l.atom, l.positive) != l.positive:
                return CnfFormula((Clause(),))
        for a, v in pure.items():
            value.setdefault(a, v)
        rest = reduced


def bf_is_solution(p: AbductionProblem, h: Iterable[Atom]) -> bool:
    """Solutionhood of one set, usable on problems too large for :func:`bf_sol`.

    Only the atoms surviving :func:`_fixed_residue` go into the truth tables.
    """
    h = frozenset(h)
    if not bf_satisfiable(_fixed_residue(p.theory.clauses, h)):
        return False
    refute = p.theory.clauses + (negate_conjunction(sorted(p.manifestations)),)
    return not bf_satisfiable(_fixed_residue(refute, h))


def bf_sol(p: AbductionProblem) -> set[frozenset]:
    hyps = sorted(p.hypotheses)
    if len(hyps) > MAX_HYPOTHESES:
        raise TooManyHypotheses(f"{len(hyps)} hypotheses exceed the limit of {MAX_HYPOTHESES}")
    if len(p.universe) > _WHOLE_TABLE:
        # one small table per subset beats one huge table
        return {s for s in _subsets(hyps) if bf_is_solution(p, s)}
    names, rows = models(p.theory, list(p.hypotheses | p.manifestations))
    mm = _mask(names, p.manifestations)
    out = set()
    for s in _subsets(hyps):
        hm = _mask(names, s)
        sel = rows[(rows & hm) == hm]
        if sel.size and np.all((sel & mm) == mm):
            out.add(s)
    return out


def minimal(sets: Iterable[frozenset], ordering) -> set[frozenset]:
    """The elements of ``sets`` with nothing strictly preferred inside ``sets``."""
    sets = set(sets)
    ordering = Ordering.parse(ordering)
    if ordering is Ordering.SUBSET:
        return {s for s in sets if not any(t < s for t in sets)}
    if ordering is Ordering.CARDINALITY:
        if not sets:
            return set()
        k = min(len(s) for s in sets)
        return {s for s in sets if len(s) == k}
    return sets


def bf_sol_min(p: AbductionProblem, ordering) -> set[frozenset]:
    return minimal(bf_sol(p), ordering)


def bf_query(p: AbductionProblem, given: Iterable[Iterable[Atom]], candidate: Iterable[Atom],
             query: str, ordering="none", sol: set | None = None) -> bool:
    """Membership of ``candidate`` in the literal definition of the query set.

    ``next``: SOL minus given; ``next_min``: the minimal elements of that;
    ``other_min``: the minimal elements of SOL minus given. ``sol`` may carry
    a precomputed :func:`bf_sol` result.
    """
    given = {frozenset(g) for g in given}
    candidate = frozenset(candidate)
    sol = bf_sol(p) if sol is None else sol
    if query == "next":
        return candidate in sol - given
    if query == "next_min":
        return candidate in minimal(sol - given, ordering)
    if query == "other_min":
        return candidate in minimal(sol, ordering) - given
    raise ValueError(f"unknown query {query!r}")
