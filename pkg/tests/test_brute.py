import random

import pytest

from abduction.brute import (bf_entails, bf_is_solution, bf_query, bf_satisfiable, bf_sol,
                             bf_sol_min, minimal, models)
from abduction.corpus import random_small
from abduction.errors import TooManyHypotheses, UniverseTooLarge
from abduction.logic import CnfFormula
from abduction.problem import AbductionProblem

from conftest import S


def test_truth_tables():
    assert not bf_satisfiable(CnfFormula.of([["a"], ["-a"]]))
    assert bf_entails(CnfFormula.of([["-a", "m"]]), ["a"], ["m"])
    assert bf_satisfiable(CnfFormula())
    names, rows = models(CnfFormula.of([["-a", "m"]]))
    assert names == ["a", "m"]
    assert sorted(rows.tolist()) == [0, 2, 3]


def test_sol(E1, E2, E5):
    assert bf_sol(E2) == {S("a"), S("b")}
    assert bf_sol_min(E1, "subset") == {S("a")}
    assert bf_sol_min(E5, "cardinality") == {S("a")}
    assert bf_sol(E5) == {S("a"), S("a", "b"), S("a", "c"), S("b", "c"), S("a", "b", "c")}


def test_query(E2, E5):
    assert bf_query(E5, [S("a")], S("b", "c"), "next_min", "cardinality")
    assert not bf_query(E5, [S("a")], S("b", "c"), "other_min", "cardinality")
    assert not bf_query(E2, [S("a"), S("b")], S("a", "b"), "next")
    with pytest.raises(ValueError):
        bf_query(E2, [], S(), "best")


def test_minimal():
    sets = {S("a"), S("a", "b"), S("b", "c")}
    assert minimal(sets, "subset") == {S("a"), S("b", "c")}
    assert minimal(sets, "cardinality") == {S("a")}
    assert minimal(sets, "none") == sets
    assert minimal(set(), "cardinality") == set()


def test_guards():
    wide = CnfFormula.of([[f"v{i}" for i in range(25)]])
    with pytest.raises(UniverseTooLarge):
        models(wide)
    many = AbductionProblem.of([f"h{i}" for i in range(17)], ["m"], [])
    with pytest.raises(TooManyHypotheses):
        bf_sol(many)


def test_single_set_check_matches_table():
    rng = random.Random(3)
    for _ in range(150):
        p = random_small(rng)
        sol = bf_sol(p)
        for h in sol:
            assert bf_is_solution(p, h)
        for name in p.hypotheses:
            assert bf_is_solution(p, {name}) == (S(name) in sol)


def test_convexity_of_oracle():
    rng = random.Random(5)
    for _ in range(100):
        sol = bf_sol(random_small(rng, max_hyp=5))
        for a in sol:
            for c in sol:
                if a < c:
                    # every set strictly between is in SOL too
                    for x in c - a:
                        assert a | {x} in sol
