import random

import pytest

from abduction.brute import bf_sol, minimal
from abduction.corpus import random_small
from abduction.engine import (enumerate_solutions, find_min_size, find_next_best,
                              is_minimal_solution, is_solution, minimal_remaining, next_best_check,
                              next_sol_check, other_minimal_check)
from abduction.errors import InvalidGiven, InvalidProblem, UnknownAtom
from abduction.problem import AbductionProblem

from conftest import S


def test_is_solution(E2):
    assert is_solution(E2, {"a"})
    assert not is_solution(E2, {"a", "b"})
    assert is_solution(AbductionProblem.of(["a"], ["m"], [["m"]]), set())
    with pytest.raises(InvalidProblem):
        is_solution(AbductionProblem.of(["a"], ["a"], []), set())
    with pytest.raises(UnknownAtom):
        is_solution(E2, {"q"})


def test_is_minimal(E1, E2):
    assert is_minimal_solution(E1, {"a"}, "subset")
    assert not is_minimal_solution(E1, {"a", "b"}, "subset")
    assert is_minimal_solution(E2, {"b"}, "cardinality")
    assert is_minimal_solution(E1, {"a", "b"}, "none")


def test_min_size(E2, E5):
    assert find_min_size(E5) == 1
    assert find_min_size(E2) == 1
    assert find_min_size(AbductionProblem.of(["a"], ["m"], [["-m"]])) is None
    assert find_min_size(AbductionProblem.of(["a"], ["m"], [["m"]])) == 0


def test_enumerate(E1, E2, E5):
    assert set(enumerate_solutions(E2)) == {S("a"), S("b")}
    sizes = [len(s) for s in enumerate_solutions(E5, "cardinality", limit=4)]
    assert sizes == [1, 2, 2, 2]
    assert next(enumerate_solutions(E5, "cardinality")) == S("a")
    assert list(enumerate_solutions(E1, "subset", [S("a")])) == [S("a", "b")]
    assert list(enumerate_solutions(E2, limit=0)) == []


def test_enumerate_subset_order():
    rng = random.Random(2)
    for _ in range(60):
        p = random_small(rng)
        out = list(enumerate_solutions(p, "subset"))
        assert set(out) == bf_sol(p)
        for i, s in enumerate(out):
            # nothing emitted later is strictly below s
            assert not any(t < s for t in out[i + 1:])


def test_next_sol(E2):
    assert next_sol_check(E2, [S("a")], {"b"})
    assert not next_sol_check(E2, [S("a")], {"a"})
    assert not next_sol_check(E2, [S("a")], {"a", "b"})
    with pytest.raises(InvalidGiven):
        next_sol_check(E2, [S("a", "b")], {"b"})


def test_next_best(E1, E5):
    assert next_best_check(E5, [S("a")], {"b", "c"}, "cardinality")
    assert next_best_check(E5, [S("a")], {"a", "b"}, "cardinality")
    assert not next_best_check(E1, [], {"a", "b"}, "subset")
    assert next_best_check(E1, [S("a")], {"a", "b"}, "subset")


def test_other_minimal(E2, E5):
    assert other_minimal_check(E2, [S("a")], {"b"}, "cardinality")
    assert not other_minimal_check(E5, [S("a")], {"b", "c"}, "cardinality")
    assert other_minimal_check(E5, [S("a")], {"b", "c"}, "subset")
    with pytest.raises(InvalidGiven):
        other_minimal_check(E5, [S("a", "b")], {"b", "c"}, "subset")


def test_find_next_best(E1, E2, E5):
    assert find_next_best(E2, [S("a")], "none") == S("b")
    given = [S("a"), S("a", "b"), S("a", "c"), S("b", "c")]
    assert find_next_best(E5, given, "cardinality") == S("a", "b", "c")
    assert find_next_best(E1, [S("a"), S("a", "b")], "subset") is None
    # ties go to the lexicographically least name tuple
    assert find_next_best(E5, [S("a")], "cardinality") == S("a", "b")
    assert find_next_best(E5, [], "none") == S("a")


def test_find_next_best_vs_oracle():
    rng = random.Random(9)
    for _ in range(80):
        p = random_small(rng)
        sol = bf_sol(p)
        given = sorted(sol, key=sorted)[:1]
        rest = sol - set(given)
        for order in ("none", "subset", "cardinality"):
            best = minimal(rest, order)
            want = min(best, key=lambda s: tuple(sorted(s))) if best else None
            assert find_next_best(p, given, order) == want
        assert set(minimal_remaining(p, given)) == minimal(rest, "subset")
