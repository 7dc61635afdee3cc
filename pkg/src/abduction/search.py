"""Candidate-and-verify search over hypothesis sets.

A generator session holds the theory plus one selector atom per hypothesis
(selector -> hypothesis), so every model proposes a hypothesis set that is
consistent with the theory. A checker session holds the theory plus the
negated manifestations; if the proposed set does not entail the
manifestations, the checker's counter-model refutes every set whose members
it makes true, and the generator learns the clause "select some hypothesis the
counter-model makes false".
"""
from __future__ import annotations

from typing import Iterable

from .logic import Atom, fresh_atoms, negate_conjunction
from .problem import AbductionProblem
from .sat import Solver


class CandidateSearch:
    def __init__(self, p: AbductionProblem, *, deterministic: bool = False):
        self.problem = p
        self.hypotheses = sorted(p.hypotheses)
        self._gen = Solver(p.theory, deterministic=deterministic)
        self._check = Solver(p.theory.with_clauses([negate_conjunction(p.manifestations)]),
                             deterministic=deterministic)
        names = fresh_atoms(p.universe, len(self.hypotheses), "_sel")
        self._sel_name = dict(zip(self.hypotheses, names))
        self._sel = {}
        self._hyp_code = {}
        for h, s in self._sel_name.items():
            code = self._gen.atom_code(s)
            self._sel[h] = code
            self._gen.add_codes([code ^ 1, self._gen.atom_code(h)])
            self._gen.set_phase(s, False)
            self._hyp_code[h] = self._check.atom_code(h)
            self._check.set_phase(h, True)
        self._counter = None
        self._aux = 0
        self.rounds = 0

    def _new_atom(self) -> int:
        while True:
            name = f"_aux{self._aux}"
            self._aux += 1
            if name not in self._gen and name not in self.problem.universe:
                return self._gen.atom_code(name)

    # structural constraints -------------------------------------------

    def exclude(self, s: Iterable[Atom]) -> None:
        """Forbid exactly the set ``s``."""
        s = set(s)
        self._gen.add_codes([self._sel[h] ^ 1 if h in s else self._sel[h] for h in self.hypotheses])

    def exclude_supersets(self, s: Iterable[Atom]) -> None:
        self._gen.add_codes([self._sel[h] ^ 1 for h in s])

    def _counter_outputs(self) -> list[int]:
        # totalizer, upward direction only: outputs[j] is forced true when
        # more than j selectors are true
        if self._counter is None:
            self._counter = self._totalize([self._sel[h] for h in self.hypotheses])
        return self._counter

    def _totalize(self, leaves):
        if len(leaves) <= 1:
            return list(leaves)
        mid = len(leaves) // 2
        left = self._totalize(leaves[:mid])
        right = self._totalize(leaves[mid:])
        out = [self._new_atom() for _ in range(len(leaves))]
        add = self._gen.add_codes
        for i, a in enumerate(left):
            add([a ^ 1, out[i]])
        for j, b in enumerate(right):
            add([b ^ 1, out[j]])
        for i, a in enumerate(left):
            for j, b in enumerate(right):
                add([a ^ 1, b ^ 1, out[i + j + 1]])
        return out

    # queries ------------------------------------------------------------

    def find(self, include: Iterable[Atom] = (), exclude: Iterable[Atom] = (),
             at_most: int | None = None, within: Iterable[Atom] | None = None):
        """Some not-yet-excluded solution meeting the constraints, or None.

        ``include``/``exclude`` fix members, ``at_most`` bounds the size and
        ``within`` restricts the answer to proper subsets of the given set.
        """
        if at_most is not None and at_most < 0:
            return None
        assumptions = [self._sel[h] for h in include] + [self._sel[h] ^ 1 for h in exclude]
        if at_most is not None and at_most < len(self.hypotheses):
            assumptions.append(self._counter_outputs()[at_most] ^ 1)
        act = None
        if within is not None:
            within = set(within)
            assumptions += [self._sel[h] ^ 1 for h in self.hypotheses if h not in within]
            act = self._new_atom()
            self._gen.add_codes([act ^ 1] + [self._sel[h] ^ 1 for h in within])
            assumptions.append(act)
        found = None
        while True:
            self.rounds += 1
            model = self._gen.solve_codes(assumptions)
            if model is None:
                break
            cand = frozenset(h for h in self.hypotheses if model[self._sel_name[h]])
            counter = self._check.solve_codes([self._hyp_code[h] for h in cand])
            if counter is None:
                found = cand
                break
            self._gen.add_codes([self._sel[h] for h in self._grow(counter)])
        if act is not None:
            self._gen.add_codes([act ^ 1])
        return found

    def _grow(self, counter) -> list[Atom]:
        # Enlarge the counter-model's true hypotheses to a maximal set that
        # still fails to entail M. The hypotheses left out form the shortest
        # blocking clause this counter-model can give.
        true = [h for h in self.hypotheses if counter[h]]
        for h in self.hypotheses:
            if counter[h]:
                continue
            model = self._check.solve_codes([self._hyp_code[x] for x in true] + [self._hyp_code[h]])
            if model is not None:
                counter = model
                true = [x for x in self.hypotheses if counter[x]]
        return [h for h in self.hypotheses if not counter[h]]

    def min_size(self) -> int | None:
        for k in range(len(self.hypotheses) + 1):
            if self.find(at_most=k) is not None:
                return k
        return None
