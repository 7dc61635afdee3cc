import pytest

from abduction.errors import InvalidGiven, InvalidProblem, UnknownAtom
from abduction.problem import (AbductionProblem, Ordering, as_given, format_set, require_valid,
                               validate_problem)


def test_validate():
    assert validate_problem(AbductionProblem.of(["a"], ["a"], [])) == ["H and M overlap on a"]
    assert validate_problem(AbductionProblem.of(["a"], ["m"], [["-a", "m"]])) == []
    assert validate_problem(AbductionProblem.of(["a"], [], [])) == ["M empty"]
    with pytest.raises(InvalidProblem):
        require_valid(AbductionProblem.of(["a"], [], []))


def test_universe_and_auxiliary(E2):
    p = AbductionProblem.of(["a"], ["m"], [["-a", "x"], ["-x", "m"]])
    assert p.universe == {"a", "m", "x"}
    assert p.auxiliary == {"x"}
    assert E2.auxiliary == frozenset()


def test_hypothesis_set(E2):
    assert E2.hypothesis_set(["a"]) == {"a"}
    with pytest.raises(UnknownAtom):
        E2.hypothesis_set(["m"])


def test_orderings():
    assert Ordering.parse("card") is Ordering.CARDINALITY
    assert Ordering.parse(Ordering.SUBSET) is Ordering.SUBSET
    a, ab = frozenset("a"), frozenset("ab")
    assert Ordering.SUBSET.strictly_precedes(a, ab)
    assert not Ordering.SUBSET.precedes(frozenset("b"), frozenset("ac"))
    assert Ordering.CARDINALITY.precedes(frozenset("c"), ab)
    with pytest.raises(ValueError):
        Ordering.parse("priority")


def test_given(E2):
    assert as_given(E2, [["b"], ["a"]]) == (frozenset("b"), frozenset("a"))
    with pytest.raises(InvalidGiven):
        as_given(E2, [["a"], ["a"]])
    assert format_set([]) == "<empty>"
    assert format_set(["b", "a"]) == "a b"
