"""Explanation checks and searches: solutions, minimal solutions, second-best
("next") solutions and other minimal solutions under the three orderings."""
from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence

from .errors import InvalidGiven
from .logic import Atom
from .problem import AbductionProblem, Ordering, as_given, format_set, require_valid, sort_key
from .sat import explains
from .search import CandidateSearch

Given = Iterable[Iterable[Atom]]


_MEMO_SIZE = 4096


def is_solution(p: AbductionProblem, h: Iterable[Atom]) -> bool:
    """Consistency of T with h, then entailment of every manifestation.

    Answers are memoized on the (immutable) problem, a bounded table per
    problem; given lists get re-validated on every check otherwise.
    """
    require_valid(p)
    h = p.hypothesis_set(h)
    memo = p.__dict__.setdefault("_solution_memo", {})
    found = memo.get(h)
    if found is None:
        if len(memo) >= _MEMO_SIZE:
            memo.clear()
        found = memo[h] = explains(p.theory, h, p.manifestations)
    return found


def find_min_size(p: AbductionProblem) -> int | None:
    """Size of the smallest explanation, or None when there is none."""
    require_valid(p)
    return CandidateSearch(p).min_size()


def is_minimal_solution(p: AbductionProblem, h: Iterable[Atom], ordering="subset") -> bool:
    ordering = Ordering.parse(ordering)
    h = p.hypothesis_set(h)
    if not is_solution(p, h):
        return False
    if ordering is Ordering.SUBSET:
        # enough by convexity: any solution strictly below h makes some h - {x} a solution
        return not any(is_solution(p, h - {x}) for x in h)
    if ordering is Ordering.CARDINALITY:
        return CandidateSearch(p).find(at_most=len(h) - 1) is None
    return True


def _solutions_only(p, given):
    given = as_given(p, given)
    for g in given:
        if not is_solution(p, g):
            raise InvalidGiven(f"given set {{{format_set(g)}}} is not a solution")
    return given


def enumerate_solutions(p: AbductionProblem, ordering="none", blocked: Given = (),
                        limit: int | None = None, *, deterministic: bool = False) -> Iterator[frozenset]:
    """Yield distinct explanations not in ``blocked``.

    Under ``cardinality`` sizes never decrease. Under ``subset`` every yielded
    set is subset-minimal among the explanations not yet yielded or blocked
    (the same size-ascending sweep guarantees this). Under ``none`` the order
    is whatever the search finds first.
    """
    require_valid(p)
    ordering = Ordering.parse(ordering)
    blocked = as_given(p, blocked)
    if limit is not None and limit <= 0:
        return
    search = CandidateSearch(p, deterministic=deterministic)
    for g in blocked:
        search.exclude(g)
    bounds = [None] if ordering is Ordering.NONE else range(len(p.hypotheses) + 1)
    count = 0
    for k in bounds:
        while True:
            s = search.find(at_most=k)
            if s is None:
                break
            yield s
            count += 1
            if limit is not None and count >= limit:
                return
            search.exclude(s)


def next_sol_check(p: AbductionProblem, given: Given, h: Iterable[Atom]) -> bool:
    given = _solutions_only(p, given)
    h = p.hypothesis_set(h)
    return h not in given and is_solution(p, h)


def next_best_check(p: AbductionProblem, given: Given, h: Iterable[Atom], ordering="subset") -> bool:
    """Is h a preferred explanation among those not already given?"""
    ordering = Ordering.parse(ordering)
    if ordering is Ordering.NONE:
        return next_sol_check(p, given, h)
    given = _solutions_only(p, given)
    h = p.hypothesis_set(h)
    if h in given or not is_solution(p, h):
        return False
    search = CandidateSearch(p)
    for g in given:
        search.exclude(g)
    if ordering is Ordering.SUBSET:
        better = search.find(within=h)
    else:
        better = search.find(at_most=len(h) - 1)
    return better is None


def other_minimal_check(p: AbductionProblem, given: Given, h: Iterable[Atom], ordering="subset") -> bool:
    """Is h a minimal explanation of the whole problem, other than the given ones?

    Under ``cardinality`` with a nonempty given list the answer needs only the
    size of a given set and the two solutionhood calls.
    """
    ordering = Ordering.parse(ordering)
    given = as_given(p, given)
    for g in given:
        if not is_minimal_solution(p, g, ordering):
            raise InvalidGiven(f"given set {{{format_set(g)}}} is not a minimal solution")
    h = p.hypothesis_set(h)
    if h in given:
        return False
    if ordering is Ordering.CARDINALITY and given:
        return len(h) == len(given[0]) and is_solution(p, h)
    return is_minimal_solution(p, h, ordering)


def find_next_best(p: AbductionProblem, given: Given = (), ordering="subset") -> frozenset | None:
    """A most preferred explanation outside ``given``; ties go to the
    lexicographically least sorted tuple of names."""
    ordering = Ordering.parse(ordering)
    given = _solutions_only(p, given)
    if ordering is Ordering.SUBSET:
        candidates = minimal_remaining(p, given)
        return min(candidates, key=sort_key) if candidates else None
    search = CandidateSearch(p)
    for g in given:
        search.exclude(g)
    bound = None
    if ordering is Ordering.CARDINALITY:
        bound = search.min_size()
        if bound is None:
            return None
    return _lex_least(search.hypotheses,
                      lambda inc, exc: search.find(include=inc, exclude=exc, at_most=bound))


def minimal_remaining(p: AbductionProblem, given: Given = ()) -> list[frozenset]:
    """All subset-minimal elements of the explanations outside ``given``."""
    require_valid(p)
    given = as_given(p, given)
    search = CandidateSearch(p)
    for g in given:
        search.exclude(g)
    out = []
    while True:
        s = search.find()
        if s is None:
            return out
        while True:
            t = search.find(within=s)
            if t is None:
                break
            s = t
        out.append(s)
        search.exclude_supersets(s)


def _lex_least(names: Sequence[Atom], exists: Callable) -> frozenset | None:
    # greedy: fix members in name order; a member of the family equal to the
    # current prefix beats every extension of it
    if exists((), ()) is None:
        return None
    chosen: list[Atom] = []
    excluded: list[Atom] = []
    i = 0
    while True:
        if exists(chosen, excluded + list(names[i:])) is not None:
            return frozenset(chosen)
        witness = exists(chosen, excluded)
        jstar = min(names.index(x) for x in witness if x not in chosen)
        j = jstar
        for k in range(i, jstar):
            if exists(chosen + [names[k]], excluded + list(names[i:k])) is not None:
                j = k
                break
        excluded += names[i:j]
        chosen.append(names[j])
        i = j + 1
