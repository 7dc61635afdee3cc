import random

import pytest

from abduction.brute import bf_is_solution, bf_sol, bf_sol_min, minimal
from abduction.corpus import random_small
from abduction.errors import CannotShrink, InvalidProblem, WidthExceeded, WrongGadget
from abduction.logic import Clause
from abduction.problem import AbductionProblem
from abduction.reductions import (add_solution_gadget, cardinality_flatten, class_of,
                                  clause_selector_reduction, equalize, lift_solution, pad_instance,
                                  pad_with_map, project_solution, representative,
                                  subset_clause_selector_reduction)

from conftest import S


def test_adding_examples(E1, E2):
    q, gm = add_solution_gadget(E2)
    assert gm.fresh["r"] == "r" and gm.fresh["s"] == "s"
    assert bf_sol(q) == {S("a", "r"), S("b", "r"), S("s")}
    q, _ = add_solution_gadget(E1)
    assert bf_sol(q) == {S("a", "r"), S("a", "b", "r"), S("s")}
    assert bf_sol_min(q, "subset") == {S("a", "r"), S("s")}
    q, _ = add_solution_gadget(AbductionProblem.of(["a"], ["m"], [["-m"]]))
    assert bf_sol(q) == {S("s")}


def test_adding_unguarded_needs_precondition():
    # T forbids m outright, so {s} is inconsistent without the u weakening
    p = AbductionProblem.of(["a"], ["m"], [["-m"]])
    q, _ = add_solution_gadget(p, guarded=False)
    assert bf_sol(q) == set()
    # when T, M and no hypotheses can hold together it works verbatim
    rng = random.Random(4)
    for _ in range(100):
        p = random_small(rng, max_hyp=4)
        q, gm = add_solution_gadget(p, guarded=False)
        fixed = p.theory.with_clauses(
            [Clause.of(m) for m in p.manifestations] + [Clause.of("-" + h) for h in p.hypotheses])
        from abduction.brute import bf_satisfiable
        if bf_satisfiable(fixed):
            assert bf_sol(q) == {lift_solution(gm, h) for h in bf_sol(p)} | {S(gm.fresh["s"])}


def test_fresh_names_avoid_collisions():
    p = AbductionProblem.of(["r", "s"], ["t"], [["-r", "t"]])
    q, gm = add_solution_gadget(p)
    assert len(set(gm.fresh.values()) & p.universe) == 0
    assert bf_sol(q) == {lift_solution(gm, h) for h in bf_sol(p)} | {S(gm.fresh["s"])}


def test_lift_project(E1, E2):
    q, gm = add_solution_gadget(E2)
    assert lift_solution(gm, {"a"}) == S("a", "r")
    assert project_solution(gm, {"s"}) is None
    assert project_solution(gm, {"a", "r"}) == S("a")
    assert project_solution(gm, {"a"}) is None
    _, fm = cardinality_flatten(E1)
    assert lift_solution(fm, {"a"}) == S("c_a", "d_b")
    assert project_solution(fm, {"c_a", "d_b"}) == S("a")
    with pytest.raises(WrongGadget):
        lift_solution(gm, {"a"}, expect="flatten")
    with pytest.raises(WrongGadget):
        lift_solution(gm, {"zz"})


def test_flatten_examples(E1, E2):
    q, _ = cardinality_flatten(E1)
    assert bf_sol_min(q, "cardinality") == {S("c_a", "d_b"), S("c_a", "c_b")}
    q, _ = cardinality_flatten(E2)
    assert bf_sol_min(q, "cardinality") == {S("c_a", "d_b"), S("d_a", "c_b")}
    q, _ = cardinality_flatten(AbductionProblem.of(["a"], ["m"], [["-m"]]))
    assert bf_sol_min(q, "cardinality") == set()


def test_selector_examples(E1, E2):
    q, h2, gm = clause_selector_reduction(E2, {"a"}, 2)
    assert len(gm.clause_index) == 18
    assert len(gm.selected) == 3
    assert bf_is_solution(q, h2)
    q, h2, _ = clause_selector_reduction(E2, {"a", "b"}, 2)
    assert not bf_is_solution(q, h2)


def _subset_minimal(q, h):
    return bf_is_solution(q, h) and not any(bf_is_solution(q, h - {x}) for x in h)


def test_subset_selector_examples(E1, E2):
    q, h2, _ = subset_clause_selector_reduction(E2, {"a"}, 2)
    assert _subset_minimal(q, h2)
    q, h2, _ = subset_clause_selector_reduction(E1, {"a", "b"}, 2)
    assert bf_is_solution(q, h2) and not _subset_minimal(q, h2)
    q, h2, _ = subset_clause_selector_reduction(E1, {"a"}, 2)
    assert _subset_minimal(q, h2)


def test_selector_theory_is_fixed(E2):
    other = AbductionProblem(E2.hypotheses, E2.manifestations,
                             E2.theory.__class__.of([["a", "b"]], E2.universe))
    assert clause_selector_reduction(E2, (), 3)[0].theory == clause_selector_reduction(other, (), 3)[0].theory


def test_selector_errors(E2):
    wide = AbductionProblem.of("abc", ["m"], [["-a", "-b", "-c", "m"]])
    with pytest.raises(WidthExceeded):
        clause_selector_reduction(wide, (), 3)
    with pytest.raises(InvalidProblem):
        clause_selector_reduction(AbductionProblem(E2.hypotheses, E2.manifestations,
                                                   E2.theory.with_clauses([Clause()])), (), 3)


def test_equalize_and_class(E2):
    inst, gm = equalize(E2)
    p = inst.problem
    assert len(p.hypotheses) == len(p.manifestations) == len(p.auxiliary)
    assert class_of(E2) == len(p.hypotheses) - 1 == 1
    assert bf_sol(p) == {lift_solution(gm, h) for h in bf_sol(E2)}


def test_padding(E2):
    inst = pad_instance((S("a"), E2), 4)
    assert class_of(inst) == 4
    assert inst.candidate == S("a", "h0", "h1", "h2")
    with pytest.raises(CannotShrink):
        pad_instance(E2, 0)
    same, _ = pad_with_map(E2, class_of(E2))
    assert class_of(same) == class_of(E2)


def test_representative():
    cand, p = representative(2)
    assert len(p.universe) == 6
    assert len(p.theory) == 6 * 2 + 15 * 4 + 20 * 8
    assert len(representative(2, width=2).problem.theory) == 6 * 2 + 15 * 4
    # the theory contains both x1 and -x1, so nothing explains anything
    assert not bf_is_solution(p, cand)
    assert class_of(representative(3)) == 2
