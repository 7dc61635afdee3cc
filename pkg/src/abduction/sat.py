"""CDCL satisfiability oracle with assumption literals and incremental sessions.

Atoms are interned to variables ``1..n``; the literal code of variable ``v`` is
``2*v`` (positive) or ``2*v + 1`` (negative), so negation is ``code ^ 1``.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UnknownAtom
from .logic import Atom, Clause, CnfFormula, Literal, negate_conjunction

_TRUE, _FALSE, _UNDEF = 1, -1, 0


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    witness: Mapping[Atom, bool] | None = None

    @property
    def status(self) -> str:
        return "satisfiable" if self.satisfiable else "unsatisfiable"

    def __bool__(self):
        return self.satisfiable


def _luby(i):
    # i-th element (0-based) of 1, 1, 2, 1, 1, 2, 4, ...
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i %= size
    return 1 << seq


class Solver:
    """A single-owner incremental SAT session.

    With ``deterministic=True`` decisions follow the lexicographic order of
    atom names; otherwise branching uses VSIDS activities (ties broken by name),
    which is also reproducible but much faster on structured queries.
    """

    restart_unit = 64

    def __init__(self, formula: CnfFormula | None = None, *, deterministic: bool = False):
        self.deterministic = deterministic
        self._index: dict[Atom, int] = {}
        self._names: list[Atom | None] = [None]
        self._val = [_UNDEF, _UNDEF]
        self._level = [0]
        self._reason: list[list[int] | None] = [None]
        self._phase = [False]
        self._activity = [0.0]
        self._seen = [False]
        self._watches: list[list[list[int]]] = [[], []]
        self._clauses: list[list[int]] = []
        self._originals: list[list[int]] = []
        self._learnts: list[list[int]] = []
        self._trail: list[int] = []
        self._trail_lim: list[int] = []
        self._qhead = 0
        self._ok = True
        self._var_inc = 1.0
        self._heap: list = []
        self._rank: list[int] = [0]
        self._order_dirty = True
        self._order: list[int] = []
        self.stats = {"solves": 0, "conflicts": 0, "decisions": 0}
        if formula is not None:
            self.add_formula(formula)

    # variables ----------------------------------------------------------

    def _var(self, name: Atom) -> int:
        v = self._index.get(name)
        if v is None:
            v = len(self._names)
            self._index[name] = v
            self._names.append(name)
            self._val += [_UNDEF, _UNDEF]
            self._level.append(0)
            self._reason.append(None)
            self._phase.append(False)
            self._activity.append(0.0)
            self._seen.append(False)
            self._watches += [[], []]
            self._rank.append(0)
            self._order_dirty = True
        return v

    def add_atom(self, name: Atom) -> None:
        self._var(name)

    def add_atoms(self, names: Iterable[Atom]) -> None:
        for name in names:
            self._var(name)

    @property
    def atoms(self) -> frozenset[Atom]:
        return frozenset(self._index)

    def __contains__(self, name):
        return name in self._index

    def code(self, lit: Literal) -> int:
        v = self._index.get(lit.atom)
        if v is None:
            raise UnknownAtom(f"unknown atom {lit.atom!r}")
        return 2 * v + (0 if lit.positive else 1)

    def atom_code(self, name: Atom, positive: bool = True) -> int:
        """Literal code for ``name``, creating the variable if needed."""
        return 2 * self._var(name) + (0 if positive else 1)

    def set_phase(self, name: Atom, value: bool) -> None:
        self._phase[self._var(name)] = value

    def _rebuild_order(self):
        order = sorted(range(1, len(self._names)), key=self._names.__getitem__)
        for rank, v in enumerate(order):
            self._rank[v] = rank
        self._order = order
        self._heap = [(-self._activity[v], self._rank[v], v) for v in order if self._val[2 * v] == _UNDEF]
        heapq.heapify(self._heap)
        self._order_dirty = False

    # clauses ------------------------------------------------------------

    def add_formula(self, formula: CnfFormula) -> None:
        names, codes = formula.compiled()
        if len(self._names) == 1:
            # fresh session: adopt the compiled numbering wholesale
            n = len(names)
            self._index = {a: i + 1 for i, a in enumerate(names)}
            self._names += names
            self._val += [_UNDEF] * (2 * n)
            self._level += [0] * n
            self._reason += [None] * n
            self._phase += [False] * n
            self._activity += [0.0] * n
            self._seen += [False] * n
            self._watches += [[] for _ in range(2 * n)]
            self._rank += [0] * n
            self._order_dirty = True
            # compiled clauses are duplicate-free and non-tautological, and
            # nothing is assigned yet, so long clauses can be watched directly
            units = []
            for c in codes:
                if len(c) == 1:
                    units.append(c)
                    continue
                c = list(c)
                self._originals.append(c)
                if c:
                    self._attach(c)
                else:
                    self._ok = False
            for c in units:
                self.add_codes(c)
            return
        remap = [0] + [self._var(a) for a in names]
        for c in codes:
            self.add_codes([2 * remap[x >> 1] + (x & 1) for x in c])

    def add_clause(self, clause: Clause | Iterable[Literal]) -> bool:
        lits = clause.literals if isinstance(clause, Clause) else clause
        return self.add_codes([self.atom_code(l.atom, l.positive) for l in lits])

    def add_codes(self, codes: Iterable[int]) -> bool:
        """Add a clause given as literal codes. Returns False once the session is unsatisfiable."""
        if self._trail_lim:
            self._cancel_until(0)
        if not self._ok:
            return False
        val = self._val
        out = []
        seen = set()
        for c in codes:
            if c in seen:
                continue
            if c ^ 1 in seen:
                return True
            seen.add(c)
            out.append(c)
        self._originals.append(out)
        if any(val[c] == _TRUE for c in out):
            return True
        out = [c for c in out if val[c] == _UNDEF]
        if not out:
            self._ok = False
            return False
        if len(out) == 1:
            self._enqueue(out[0], None)
            if self._propagate() is not None:
                self._ok = False
            return self._ok
        self._attach(out)
        return True

    def _attach(self, c, learnt=False):
        self._watches[c[0]].append(c)
        self._watches[c[1]].append(c)
        (self._learnts if learnt else self._clauses).append(c)

    # trail --------------------------------------------------------------

    def _enqueue(self, lit, reason):
        v = lit >> 1
        self._val[lit] = _TRUE
        self._val[lit ^ 1] = _FALSE
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(lit)

    def _cancel_until(self, level):
        if len(self._trail_lim) <= level:
            return
        val, phase, reason = self._val, self._phase, self._reason
        heap, activity, rank = self._heap, self._activity, self._rank
        lim = self._trail_lim[level]
        trail = self._trail
        for i in range(len(trail) - 1, lim - 1, -1):
            lit = trail[i]
            v = lit >> 1
            val[lit] = _UNDEF
            val[lit ^ 1] = _UNDEF
            reason[v] = None
            phase[v] = not (lit & 1)
            heapq.heappush(heap, (-activity[v], rank[v], v))
        del trail[lim:]
        del self._trail_lim[level:]
        self._qhead = lim

    def _propagate(self):
        val, watches, trail = self._val, self._watches, self._trail
        while self._qhead < len(trail):
            p = trail[self._qhead]
            self._qhead += 1
            false_lit = p ^ 1
            ws = watches[false_lit]
            i = j = 0
            n = len(ws)
            while i < n:
                c = ws[i]
                i += 1
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                if val[first] == _TRUE:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    if val[c[k]] != _FALSE:
                        c[1] = c[k]
                        c[k] = false_lit
                        watches[c[1]].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if val[first] == _FALSE:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        del ws[j:]
                        self._qhead = len(trail)
                        return c
                    self._enqueue(first, c)
            del ws[j:]
        return None

    # conflict analysis --------------------------------------------------

    def _bump(self, v):
        act = self._activity
        act[v] += self._var_inc
        if act[v] > 1e100:
            for i in range(1, len(act)):
                act[i] *= 1e-100
            self._var_inc *= 1e-100
            self._heap = [(-act[u], self._rank[u], u) for (_, _, u) in self._heap]
            heapq.heapify(self._heap)
        if self._val[2 * v] == _UNDEF:
            heapq.heappush(self._heap, (-act[v], self._rank[v], v))

    def _analyze(self, confl):
        seen, level, reason, trail = self._seen, self._level, self._reason, self._trail
        cur = len(self._trail_lim)
        learnt = [0]
        path = 0
        p = -1
        idx = len(trail) - 1
        while True:
            start = 0 if p == -1 else 1
            for k in range(start, len(confl)):
                q = confl[k]
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if level[v] >= cur:
                        path += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            confl = reason[p >> 1]
            seen[p >> 1] = False
            path -= 1
            if path == 0:
                break
        learnt[0] = p ^ 1
        for q in learnt[1:]:
            seen[q >> 1] = False
        if len(learnt) == 1:
            return learnt, 0
        best = 1
        for k in range(2, len(learnt)):
            if level[learnt[k] >> 1] > level[learnt[best] >> 1]:
                best = k
        learnt[1], learnt[best] = learnt[best], learnt[1]
        return learnt, level[learnt[1] >> 1]

    # search -------------------------------------------------------------

    def _pick_branch(self):
        val = self._val
        if self.deterministic:
            for v in self._order:
                if val[2 * v] == _UNDEF:
                    return 2 * v + (0 if self._phase[v] else 1)
            return None
        if len(self._heap) > 8 * len(self._names) + 64:
            self._rebuild_order()
        heap, act = self._heap, self._activity
        while heap:
            a, _, v = heapq.heappop(heap)
            if val[2 * v] == _UNDEF and -a == act[v]:
                return 2 * v + (0 if self._phase[v] else 1)
        # stale heap entries only; fall back to a scan
        for v in self._order:
            if val[2 * v] == _UNDEF:
                return 2 * v + (0 if self._phase[v] else 1)
        return None

    def _search(self, assumptions, budget):
        val = self._val
        conflicts = 0
        while True:
            confl = self._propagate()
            if confl is not None:
                conflicts += 1
                self.stats["conflicts"] += 1
                if not self._trail_lim:
                    self._ok = False
                    return False
                learnt, bt = self._analyze(confl)
                self._cancel_until(bt)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self._attach(learnt, learnt=True)
                    self._enqueue(learnt[0], learnt)
                self._var_inc *= 1.05
                continue
            if conflicts >= budget:
                self._cancel_until(0)
                return None
            nxt = None
            while len(self._trail_lim) < len(assumptions):
                a = assumptions[len(self._trail_lim)]
                if val[a] == _TRUE:
                    self._trail_lim.append(len(self._trail))
                elif val[a] == _FALSE:
                    return False
                else:
                    nxt = a
                    break
            if nxt is None:
                nxt = self._pick_branch()
                if nxt is None:
                    return True
                self.stats["decisions"] += 1
            self._trail_lim.append(len(self._trail))
            self._enqueue(nxt, None)

    def solve_codes(self, assumptions: Iterable[int] = ()) -> dict[Atom, bool] | None:
        """Solve under literal-code assumptions; returns a model or None."""
        self.stats["solves"] += 1
        assumptions = list(assumptions)
        if self._trail_lim:
            self._cancel_until(0)
        if not self._ok:
            return None
        if self._order_dirty:
            self._rebuild_order()
        if self._propagate() is not None:
            self._ok = False
            return None
        restarts = 0
        while True:
            status = self._search(assumptions, _luby(restarts) * self.restart_unit)
            restarts += 1
            if status is not None:
                break
        if not status:
            self._cancel_until(0)
            return None
        val, names = self._val, self._names
        model = {names[v]: val[2 * v] == _TRUE for v in range(1, len(names))}
        assert self._check(model, assumptions), "solver produced an invalid witness"
        self._cancel_until(0)
        return model

    def _check(self, model, assumptions):
        val = self._val
        for c in self._originals:
            if not any(val[x] == _TRUE for x in c):
                return False
        return all(val[a] == _TRUE for a in assumptions)

    def solve(self, assumptions: Iterable[Literal] = ()) -> SatResult:
        codes = [self.code(lit) for lit in assumptions]
        model = self.solve_codes(codes)
        if model is None:
            return SatResult(False)
        return SatResult(True, model)


def solve(f: CnfFormula, assumptions: Iterable[Literal] = (), *, deterministic: bool = False) -> SatResult:
    """Decide ``f`` under ``assumptions``; assumption atoms must be in ``f.universe``."""
    assumptions = list(assumptions)
    for lit in assumptions:
        if lit.atom not in f.universe:
            raise UnknownAtom(f"assumption atom {lit.atom!r} is not in the formula's universe")
    return Solver(f, deterministic=deterministic).solve(assumptions)


def _hyp_codes(solver, t, hyps):
    out = []
    for h in hyps:
        if h not in t.universe:
            raise UnknownAtom(f"atom {h!r} is not in the theory's universe")
        out.append(solver.atom_code(h))
    return out


def is_consistent(t: CnfFormula, hyps: Iterable[Atom]) -> bool:
    solver = Solver(t)
    return solver.solve_codes(_hyp_codes(solver, t, hyps)) is not None


def entails_all(t: CnfFormula, hyps: Iterable[Atom], ms: Iterable[Atom]) -> bool:
    """True iff ``t`` together with ``hyps`` entails every atom of ``ms``."""
    ms = list(ms)
    solver = Solver(t)
    codes = _hyp_codes(solver, t, hyps)
    if not ms:
        negate_conjunction(ms)  # raises EmptyManifestationSet
    solver.add_codes([c ^ 1 for c in _hyp_codes(solver, t, ms)])
    return solver.solve_codes(codes) is None


def explains(t: CnfFormula, hyps: Iterable[Atom], ms: Iterable[Atom]) -> bool:
    """``is_consistent`` and ``entails_all`` in one session.

    The negated manifestations sit behind a fresh activation atom, so the same
    solver (and whatever it learnt) answers both questions.
    """
    ms = list(ms)
    if not ms:
        negate_conjunction(ms)
    solver = Solver(t)
    codes = _hyp_codes(solver, t, hyps)
    if solver.solve_codes(codes) is None:
        return False
    name = "_goal"
    while name in t.universe:
        name += "_"
    act = solver.atom_code(name)
    solver.add_codes([act ^ 1] + [c ^ 1 for c in _hyp_codes(solver, t, ms)])
    return solver.solve_codes(codes + [act]) is None
