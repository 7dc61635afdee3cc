"""Instance transformations with known solution-set correspondences.

Every transformation returns the new problem together with a
:class:`GadgetMap` recording the fresh atoms it introduced, which
:func:`lift_solution` and :func:`project_solution` use to move explanations
between the source and the target problem.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .errors import CannotShrink, InvalidProblem, UnsupportedWidth, WidthExceeded, WrongGadget
from .logic import (Atom, Clause, CnfFormula, clause_universe, fresh_atom, fresh_atoms,
                    make_clause, neg, pos)
from .problem import AbductionProblem, require_valid

KINDS = ("adding", "flatten", "selector", "subset_selector", "padding")


@dataclass(frozen=True)
class GadgetMap:
    kind: str
    fresh: Mapping[str, Atom | tuple[Atom, ...]]
    source_hypotheses: frozenset[Atom]
    clause_index: tuple[Clause, ...] | None = None
    # selector kinds: positions in clause_index of the source theory's clauses
    selected: frozenset[int] = frozenset()
    # flatten: the source hypotheses in the order of the c/d/e families
    index: tuple[Atom, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown gadget kind {self.kind!r}")
        object.__setattr__(self, "fresh", dict(self.fresh))

    def atoms(self) -> frozenset[Atom]:
        """Every fresh atom introduced by the transformation."""
        out = set()
        for v in self.fresh.values():
            out.update((v,) if isinstance(v, str) else v)
        return frozenset(out)


class Instance(NamedTuple):
    """A candidate explanation together with its problem."""

    candidate: frozenset[Atom]
    problem: AbductionProblem


def _implies(a: Atom, b: Atom) -> Clause:
    return make_clause([neg(a), pos(b)])


# adding a solution ------------------------------------------------------

def add_solution_gadget(p: AbductionProblem, guarded: bool = True) -> tuple[AbductionProblem, GadgetMap]:
    """Add the single new explanation ``{s}`` and lift every old one by ``r``.

    The target has hypotheses H+{r,s} and manifestations M+{t}; ``s`` implies
    every manifestation and excludes every other hypothesis, ``r`` implies
    ``t``. Then SOL(target) = {S+{r} : S in SOL(p)} + {{s}}.

    With ``guarded=True`` each theory clause is weakened by a fresh atom ``u``
    that ``r`` forces false, so the equation holds for every input. With
    ``guarded=False`` the theory is copied verbatim; the equation then needs
    T with all manifestations true and all hypotheses false to be satisfiable.
    """
    require_valid(p)
    universe = set(p.universe)
    names = {}
    for role in ("r", "s", "t") + (("u",) if guarded else ()):
        names[role] = fresh_atom(universe, role)
        universe.add(names[role])
    r, s, t = names["r"], names["s"], names["t"]
    if guarded:
        u = names["u"]
        clauses = [make_clause(c.literals | {pos(u)}) for c in p.theory.clauses]
        clauses.append(make_clause([neg(r), neg(u)]))
    else:
        clauses = list(p.theory.clauses)
    clauses += [_implies(s, m) for m in sorted(p.manifestations | {t})]
    clauses.append(_implies(r, t))
    clauses += [make_clause([neg(s), neg(h)]) for h in sorted(p.hypotheses | {r})]
    target = AbductionProblem(p.hypotheses | {r, s}, p.manifestations | {t},
                              CnfFormula(tuple(clauses), frozenset(universe)))
    return target, GadgetMap("adding", names, p.hypotheses)


# flattening to equal-size solutions ---------------------------------------

def _family(universe: set, keys: Iterable[str], prefix: str) -> tuple[Atom, ...]:
    out = []
    for k in keys:
        a = fresh_atom(universe, f"{prefix}{k}")
        universe.add(a)
        out.append(a)
    return tuple(out)


def cardinality_flatten(p: AbductionProblem) -> tuple[AbductionProblem, GadgetMap]:
    """Turn every explanation of ``p`` into a cardinality-minimal one.

    For each hypothesis h_i the target has hypotheses c_i and d_i and a
    manifestation e_i, with c_i -> h_i, c_i -> e_i and d_i -> e_i. The
    cardinality-minimal explanations of the target pick exactly one of
    c_i, d_i per index, and c_i is picked iff h_i is in an explanation of ``p``.
    """
    require_valid(p)
    universe = set(p.universe)
    index = tuple(sorted(p.hypotheses))
    cs = _family(universe, index, "c_")
    ds = _family(universe, index, "d_")
    es = _family(universe, index, "e_")
    clauses = []
    for h, c, d, e in zip(index, cs, ds, es):
        clauses += [_implies(c, h), _implies(c, e), _implies(d, e)]
    clauses += p.theory.clauses
    target = AbductionProblem(frozenset(cs + ds), p.manifestations | frozenset(es),
                              CnfFormula(tuple(clauses), frozenset(universe)))
    gm = GadgetMap("flatten", {"c_i": cs, "d_i": ds, "e_i": es}, p.hypotheses, index=index)
    return target, gm


# clause selectors -------------------------------------------------------------

def _selector_index(p: AbductionProblem, width: int):
    if not 1 <= width <= 3:
        raise UnsupportedWidth(f"clause width must be in 1..3, got {width}")
    present = set()
    for c in p.theory.clauses:
        if c.tautological:
            continue
        if c.width == 0:
            raise InvalidProblem("the empty clause has no selector")
        if c.width > width:
            raise WidthExceeded(f"clause ({c}) is wider than {width}")
        present.add(c)
    pi = clause_universe(sorted(p.universe), width)
    where = {c: i for i, c in enumerate(pi)}
    return tuple(pi), frozenset(where[c] for c in present)


def clause_selector_reduction(p: AbductionProblem, h1: Iterable[Atom], width: int = 3):
    """Encode the theory as selector hypotheses over the fixed clause universe.

    The target theory is {c_i -> gamma_i} for every clause gamma_i of width at
    most ``width`` over the source universe, so it depends only on that
    universe and ``width``. Returns ``(target, h2, gadget)`` where ``h2`` is
    ``h1`` plus the selectors of the source clauses; ``h1`` explains the source
    iff ``h2`` explains the target.
    """
    require_valid(p)
    h1 = p.hypothesis_set(h1)
    pi, selected = _selector_index(p, width)
    universe = set(p.universe)
    cs = tuple(fresh_atoms(universe, len(pi), "c"))
    universe.update(cs)
    clauses = []
    for c, gamma in zip(cs, pi):
        clauses.append(make_clause(gamma.literals | {neg(c)}))
    target = AbductionProblem(p.hypotheses | frozenset(cs), p.manifestations,
                              CnfFormula(tuple(clauses), frozenset(universe)))
    gm = GadgetMap("selector", {"c_i": cs}, p.hypotheses, clause_index=pi, selected=selected)
    return target, lift_solution(gm, h1), gm


def subset_clause_selector_reduction(p: AbductionProblem, h1: Iterable[Atom], width: int = 3):
    """Selector encoding that also preserves subset-minimality.

    Adds for every clause index a second selector d_i and a manifestation e_i
    with c_i -> e_i and d_i -> e_i; ``h2`` takes c_i for source clauses and
    d_i for the others, so no selector can be dropped from it.
    """
    require_valid(p)
    h1 = p.hypothesis_set(h1)
    pi, selected = _selector_index(p, width)
    universe = set(p.universe)
    cs = tuple(fresh_atoms(universe, len(pi), "c"))
    universe.update(cs)
    ds = tuple(fresh_atoms(universe, len(pi), "d"))
    universe.update(ds)
    es = tuple(fresh_atoms(universe, len(pi), "e"))
    universe.update(es)
    clauses = []
    for c, d, e in zip(cs, ds, es):
        clauses += [_implies(c, e), _implies(d, e)]
    for c, gamma in zip(cs, pi):
        clauses.append(make_clause(gamma.literals | {neg(c)}))
    target = AbductionProblem(p.hypotheses | frozenset(cs + ds), p.manifestations | frozenset(es),
                              CnfFormula(tuple(clauses), frozenset(universe)))
    gm = GadgetMap("subset_selector", {"c_i": cs, "d_i": ds, "e_i": es}, p.hypotheses,
                   clause_index=pi, selected=selected)
    return target, lift_solution(gm, h1), gm


# classes, representatives and padding ------------------------------------------

def _add_block(universe: set, clauses: list, k: int):
    # k new hypotheses whose conjunction is the only support of a new manifestation
    hs = fresh_atoms(universe, k, "h")
    universe.update(hs)
    m = fresh_atom(universe, "m")
    universe.add(m)
    clauses.append(make_clause([neg(h) for h in hs] + [pos(m)]))
    return hs, m


def _add_asserted(universe: set, clauses: list, k: int):
    ms = fresh_atoms(universe, k, "m")
    universe.update(ms)
    clauses += [make_clause([pos(m)]) for m in ms]
    return ms


def _add_tautologies(universe: set, clauses: list, k: int):
    xs = fresh_atoms(universe, k, "x")
    universe.update(xs)
    clauses += [make_clause([pos(x), neg(x)]) for x in xs]
    return xs


def _as_instance(i) -> Instance:
    if isinstance(i, AbductionProblem):
        return Instance(frozenset(), i)
    cand, p = i
    return Instance(p.hypothesis_set(cand), p)


def equalize(i) -> tuple[Instance, GadgetMap]:
    """Pad so that hypotheses, manifestations and other atoms are equinumerous.

    Missing auxiliary atoms come as tautologies x | -x, missing manifestations
    are asserted by unit clauses, and missing hypotheses come as one block
    whose conjunction implies one new manifestation (the block joins the
    candidate). Explanations of the result are those of the input plus the block.
    """
    cand, p = _as_instance(i)
    require_valid(p)
    n_h, n_m, n_x = len(p.hypotheses), len(p.manifestations), len(p.auxiliary)
    size = max(n_h, n_m, n_x)
    if n_h < size and n_m == size:
        size += 1  # the hypothesis block brings its own manifestation
    universe = set(p.universe)
    clauses = list(p.theory.clauses)
    new_h, new_m = [], []
    if n_h < size:
        new_h, m = _add_block(universe, clauses, size - n_h)
        new_m.append(m)
    new_m += _add_asserted(universe, clauses, size - n_m - len(new_m))
    new_x = _add_tautologies(universe, clauses, size - n_x)
    target = AbductionProblem(p.hypotheses | frozenset(new_h), p.manifestations | frozenset(new_m),
                              CnfFormula(tuple(clauses), frozenset(universe)))
    gm = GadgetMap("padding", {"h_i": tuple(new_h), "m_i": tuple(new_m), "x_i": tuple(new_x)},
                   p.hypotheses)
    return Instance(cand | frozenset(new_h), target), gm


def class_of(i) -> int:
    """Number of hypotheses minus one, after equalizing."""
    inst, _ = equalize(i)
    return len(inst.problem.hypotheses) - 1


def representative(m: int, width: int = 3) -> Instance:
    """Empty candidate over H = h1..hm, M = m1..mm, X = x1..xm with the theory
    made of every clause of width at most ``width`` over those atoms."""
    if m < 1:
        raise ValueError("representative size must be at least 1")
    hs = [f"h{i}" for i in range(1, m + 1)]
    ms = [f"m{i}" for i in range(1, m + 1)]
    xs = [f"x{i}" for i in range(1, m + 1)]
    theory = CnfFormula(tuple(clause_universe(hs + ms + xs, width)), frozenset(hs + ms + xs))
    return Instance(frozenset(), AbductionProblem(frozenset(hs), frozenset(ms), theory))


def pad_with_map(i, m: int) -> tuple[Instance, GadgetMap]:
    """Equalize, then grow to class ``m`` (see :func:`pad_instance`)."""
    inst, gm = equalize(i)
    cand, p = inst
    k = m - (len(p.hypotheses) - 1)
    if k < 0:
        raise CannotShrink(f"instance has class {len(p.hypotheses) - 1}, cannot pad to {m}")
    new_h, new_m, new_x = list(gm.fresh["h_i"]), list(gm.fresh["m_i"]), list(gm.fresh["x_i"])
    if k:
        universe = set(p.universe)
        clauses = list(p.theory.clauses)
        hs, first = _add_block(universe, clauses, k)
        ms = _add_asserted(universe, clauses, k - 1)
        xs = _add_tautologies(universe, clauses, k)
        p = AbductionProblem(p.hypotheses | frozenset(hs), p.manifestations | {first} | frozenset(ms),
                             CnfFormula(tuple(clauses), frozenset(universe)))
        cand = cand | frozenset(hs)
        new_h += hs
        new_m += [first] + ms
        new_x += xs
    gm = GadgetMap("padding", {"h_i": tuple(new_h), "m_i": tuple(new_m), "x_i": tuple(new_x)},
                   gm.source_hypotheses)
    return Instance(cand, p), gm


def pad_instance(i, m: int) -> Instance:
    """The instance grown to class ``m``.

    Explanations of the result are exactly those of the input plus every new
    hypothesis, so every verdict about the (lifted) candidate is unchanged.
    """
    return pad_with_map(i, m)[0]


# moving explanations across a gadget ------------------------------------------------

def _check_kind(gm, expect):
    if expect is not None and gm.kind != expect:
        raise WrongGadget(f"expected a {expect} gadget, got {gm.kind}")


def lift_solution(gm: GadgetMap, h: Iterable[Atom], expect: str | None = None) -> frozenset[Atom]:
    """Image in the target problem of a source hypothesis set."""
    _check_kind(gm, expect)
    h = frozenset(h)
    if not h <= gm.source_hypotheses:
        raise WrongGadget(f"{sorted(h - gm.source_hypotheses)} are not source hypotheses of this gadget")
    if gm.kind == "adding":
        return h | {gm.fresh["r"]}
    if gm.kind == "flatten":
        return frozenset(c if x in h else d for x, c, d in zip(gm.index, gm.fresh["c_i"], gm.fresh["d_i"]))
    if gm.kind == "selector":
        return h | frozenset(gm.fresh["c_i"][i] for i in gm.selected)
    if gm.kind == "subset_selector":
        cs, ds = gm.fresh["c_i"], gm.fresh["d_i"]
        return h | frozenset(cs[i] if i in gm.selected else ds[i] for i in range(len(cs)))
    return h | frozenset(gm.fresh["h_i"])


def project_solution(gm: GadgetMap, h: Iterable[Atom], expect: str | None = None) -> frozenset[Atom] | None:
    """Preimage of a target hypothesis set, or None when it has none."""
    _check_kind(gm, expect)
    h = frozenset(h)
    if gm.kind == "adding":
        if gm.fresh["s"] in h or gm.fresh["r"] not in h:
            return None
        rest = h - {gm.fresh["r"]}
        return rest if rest <= gm.source_hypotheses else None
    if gm.kind == "flatten":
        return frozenset(x for x, c in zip(gm.index, gm.fresh["c_i"]) if c in h)
    if gm.kind in ("selector", "subset_selector"):
        base = h & gm.source_hypotheses
        return base if lift_solution(gm, base) == h else None
    new = frozenset(gm.fresh["h_i"])
    if not new <= h:
        return None
    return h - new
