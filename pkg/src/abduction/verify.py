"""Check the solution-set correspondence of each gadget on a concrete instance.

Both sides are computed with the brute-force oracle. Source problems must be
small enough for :func:`bf_sol`; on the target side, single sets are checked
with :func:`bf_is_solution`, which copes with the many selector atoms.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .brute import bf_is_solution, bf_sol, bf_sol_min, minimal
from .corpus import random_small
from .problem import AbductionProblem, format_set
from .reductions import (add_solution_gadget, cardinality_flatten, class_of,
                         clause_selector_reduction, lift_solution, pad_with_map,
                         project_solution, subset_clause_selector_reduction)

GADGETS = ("adding", "flatten", "selector", "subset-selector", "pad")


@dataclass
class LemmaReport:
    gadget: str
    ok: bool
    checked: int = 0
    problem: str = ""

    def __bool__(self):
        return self.ok


def _subsets(items):
    items = sorted(items)
    for k in range(len(items) + 1):
        for c in combinations(items, k):
            yield frozenset(c)


def _show(sets):
    return "{" + ", ".join("{" + format_set(s) + "}" for s in sorted(sets, key=lambda s: (len(s), sorted(s)))) + "}"


def _subset_minimal_target(q, h2):
    # single removals suffice by convexity
    return bf_is_solution(q, h2) and not any(bf_is_solution(q, h2 - {x}) for x in h2)


def check_adding(p: AbductionProblem) -> LemmaReport:
    q, gm = add_solution_gadget(p)
    expected = {lift_solution(gm, h) for h in bf_sol(p)} | {frozenset({gm.fresh["s"]})}
    got = bf_sol(q)
    if got != expected:
        return LemmaReport("adding", False, 1, f"SOL(P') = {_show(got)} but expected {_show(expected)}")
    return LemmaReport("adding", True, 1)


def check_flatten(p: AbductionProblem) -> LemmaReport:
    q, gm = cardinality_flatten(p)
    sol = bf_sol(p)
    best = bf_sol_min(q, "cardinality")
    n = len(gm.index)
    for g in best:
        per_index = [(c in g) + (d in g) for c, d in zip(gm.fresh["c_i"], gm.fresh["d_i"])]
        if len(g) != n or any(k != 1 for k in per_index):
            return LemmaReport("flatten", False, 1, f"{{{format_set(g)}}} does not pick one of c_i, d_i per index")
        if lift_solution(gm, project_solution(gm, g)) != g:
            return LemmaReport("flatten", False, 1, f"lift(project({{{format_set(g)}}})) differs")
    projected = {project_solution(gm, g) for g in best}
    if len(projected) != len(best) or projected != sol:
        return LemmaReport("flatten", False, 1,
                           f"projected SOL_card(P') = {_show(projected)} but SOL(P) = {_show(sol)}")
    return LemmaReport("flatten", True, 1)


def check_selector(p: AbductionProblem, width: int = 3, subset: bool = False, candidates=None) -> LemmaReport:
    name = "subset-selector" if subset else "selector"
    build = subset_clause_selector_reduction if subset else clause_selector_reduction
    sol = bf_sol(p)
    sol_sub = minimal(sol, "subset")
    # the target theory must not depend on the source theory
    empty = AbductionProblem(p.hypotheses, p.manifestations, p.theory.__class__((), p.universe))
    reference = build(empty, (), width)[0].theory
    checked = 0
    for h1 in candidates if candidates is not None else _subsets(p.hypotheses):
        q, h2, _ = build(p, h1, width)
        if q.theory != reference:
            return LemmaReport(name, False, checked, "target theory depends on the source theory")
        if (h1 in sol) != bf_is_solution(q, h2):
            return LemmaReport(name, False, checked,
                               f"h1 = {{{format_set(h1)}}}: source says {h1 in sol}, target disagrees")
        if subset and (h1 in sol_sub) != _subset_minimal_target(q, h2):
            return LemmaReport(name, False, checked,
                               f"h1 = {{{format_set(h1)}}}: subset-minimality differs across the reduction")
        checked += 1
    return LemmaReport(name, True, checked)


def check_padding(p: AbductionProblem, targets=None) -> LemmaReport:
    sol = bf_sol(p)
    base = class_of(p)
    checked = 0
    for m in targets if targets is not None else range(base, base + 4):
        inst, gm = pad_with_map(p, m)
        q = inst.problem
        got = bf_sol(q)
        lifted = {lift_solution(gm, h) for h in sol}
        if got != lifted:
            return LemmaReport("pad", False, checked,
                               f"class {m}: SOL = {_show(got)} but lifted SOL(P) = {_show(lifted)}")
        for ordering in ("subset", "cardinality"):
            src, tgt = minimal(sol, ordering), minimal(got, ordering)
            for h in _subsets(p.hypotheses):
                if (h in src) != (lift_solution(gm, h) in tgt):
                    return LemmaReport("pad", False, checked,
                                       f"class {m}: {ordering}-minimality of {{{format_set(h)}}} changed")
        checked += 1
    return LemmaReport("pad", True, checked)


def verify_lemma(p: AbductionProblem, gadget: str, *, width: int = 3, target: int | None = None,
                 candidate=None) -> LemmaReport:
    """Dispatch to the check for ``gadget`` (one of :data:`GADGETS`)."""
    if gadget == "adding":
        return check_adding(p)
    if gadget == "flatten":
        return check_flatten(p)
    if gadget in ("selector", "subset-selector"):
        cands = None if candidate is None else [frozenset(candidate)]
        return check_selector(p, width, subset=gadget == "subset-selector", candidates=cands)
    if gadget == "pad":
        return check_padding(p, None if target is None else [target])
    raise ValueError(f"unknown gadget {gadget!r}")


def random_instance(gadget: str, seed: int, width: int = 3) -> AbductionProblem:
    """A seeded instance sized so both sides fit the brute-force oracle."""
    rng = random.Random(seed)
    if gadget in ("selector", "subset-selector"):
        return random_small(rng, max_hyp=3, max_atoms=4, max_clauses=6, max_width=width)
    if gadget == "pad":
        return random_small(rng, max_hyp=4, max_atoms=6, max_clauses=10)
    return random_small(rng, max_hyp=5, max_atoms=9, max_clauses=12)
