"""Named small instances and seeded random instance generators."""
from __future__ import annotations

import random

from .logic import Clause, CnfFormula, Literal
from .problem import AbductionProblem


def e1() -> AbductionProblem:
    return AbductionProblem.of("ab", ["m"], [["-a", "m"]])


def e2() -> AbductionProblem:
    return AbductionProblem.of("ab", ["m"], [["-a", "m"], ["-b", "m"], ["-a", "-b"]])


def e5() -> AbductionProblem:
    return AbductionProblem.of("abc", ["m1", "m2"],
                               [["-a", "m1"], ["-a", "m2"], ["-b", "m1"], ["-c", "m2"]])


def random_problem(rng: random.Random, n_hyp: int, n_man: int, n_aux: int, n_clauses: int,
                   max_width: int = 3, rule_bias: float = 0.5) -> AbductionProblem:
    """A random problem over ``h*``, ``m*`` and ``x*`` atoms.

    With probability ``rule_bias`` a clause is an explanatory rule (a
    hypothesis or auxiliary atom implies an auxiliary atom or manifestation),
    otherwise it is a uniformly random clause of width 1..max_width.
    """
    hyps = [f"h{i}" for i in range(n_hyp)]
    mans = [f"m{i}" for i in range(n_man)]
    aux = [f"x{i}" for i in range(n_aux)]
    atoms = hyps + mans + aux
    clauses = []
    for _ in range(n_clauses):
        if rng.random() < rule_bias and hyps:
            body = rng.sample(hyps + aux, min(len(hyps + aux), rng.randint(1, max(1, max_width - 1))))
            heads = [a for a in mans + aux if a not in body]
            if not heads:
                continue
            lits = [Literal(b, False) for b in body] + [Literal(rng.choice(heads), True)]
        else:
            width = rng.randint(1, min(max_width, len(atoms)))
            lits = [Literal(a, rng.random() < 0.5) for a in rng.sample(atoms, width)]
        clauses.append(Clause(frozenset(lits)))
    return AbductionProblem(frozenset(hyps), frozenset(mans), CnfFormula(tuple(clauses), frozenset(atoms)))


def random_small(rng: random.Random, max_hyp: int = 6, max_atoms: int = 9,
                 max_clauses: int = 12, max_width: int = 3) -> AbductionProblem:
    n_hyp = rng.randint(1, max_hyp)
    n_man = rng.randint(1, max(1, min(3, max_atoms - n_hyp)))
    n_aux = rng.randint(0, max(0, max_atoms - n_hyp - n_man))
    return random_problem(rng, n_hyp, n_man, n_aux, rng.randint(0, max_clauses), max_width)


def scale_instance(seed: int = 0, n_hyp: int = 40, n_clauses: int = 200, n_man: int = 4) -> AbductionProblem:
    """A larger layered instance: hypotheses cause intermediate effects which
    cause manifestations, plus incompatibilities between hypotheses."""
    rng = random.Random(seed)
    hyps = [f"h{i:02d}" for i in range(n_hyp)]
    mids = [f"x{i:02d}" for i in range(n_hyp // 2)]
    mans = [f"m{i}" for i in range(n_man)]
    clauses = []
    for x in mids:
        # each effect supports one manifestation
        clauses.append(Clause.of("-" + x, rng.choice(mans)))
    while len(clauses) < n_clauses:
        r = rng.random()
        if r < 0.55:
            clauses.append(Clause.of("-" + rng.choice(hyps), rng.choice(mids)))
        elif r < 0.75:
            a, b = rng.sample(hyps, 2)
            clauses.append(Clause.of("-" + a, "-" + b, rng.choice(mans)))
        elif r < 0.9:
            a, b = rng.sample(hyps, 2)
            clauses.append(Clause.of("-" + a, "-" + b))
        else:
            a, b = rng.sample(mids, 2)
            clauses.append(Clause.of("-" + a, "-" + b, rng.choice(mans)))
    return AbductionProblem(frozenset(hyps), frozenset(mans),
                            CnfFormula(tuple(clauses), frozenset(hyps + mids + mans)))
