"""Line-oriented instance format.

::

    # comment
    hyp a b            hypotheses (repeatable, union)
    man m              manifestations (repeatable, union)
    clause -a m        one clause; ``-x`` is a negative literal
    given a ;          known solutions, each terminated by ``;`` (``given ;`` is the empty set)
    candidate b        the candidate explanation (repeatable, union)

Atoms are declared by use. Printing is canonical: atoms sorted, literals in
canonical order, clauses and given sets in document order.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .logic import CnfFormula, Literal, check_atom, fresh_atoms, make_clause
from .problem import AbductionProblem


@dataclass(frozen=True)
class InstanceDocument:
    problem: AbductionProblem
    given: tuple[frozenset[str], ...] = ()
    candidate: frozenset[str] | None = None

    def canonical(self) -> "InstanceDocument":
        """The same document with the universe cut down to mentioned atoms."""
        p = self.problem
        used = set(p.hypotheses | p.manifestations)
        for c in p.theory.clauses:
            used.update(c.atoms)
        theory = CnfFormula(p.theory.clauses, frozenset(used))
        return InstanceDocument(AbductionProblem(p.hypotheses, p.manifestations, theory),
                                tuple(self.given), self.candidate)


def _atom(token, line):
    try:
        return check_atom(token)
    except ValueError as e:
        raise ParseError(str(e), line) from None


def parse_instance(text: str) -> InstanceDocument:
    hyps: dict[str, int] = {}
    mans: dict[str, int] = {}
    clauses = []
    given: list[frozenset[str]] = []
    given_line: dict[frozenset, int] = {}
    candidate = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        directive, args = tokens[0], tokens[1:]
        if directive in ("hyp", "man"):
            if not args:
                raise ParseError(f"'{directive}' needs at least one atom", lineno)
            own, other = (hyps, mans) if directive == "hyp" else (mans, hyps)
            for tok in args:
                a = _atom(tok, lineno)
                if a in other:
                    raise ParseError(f"H and M overlap on {a}", lineno)
                own.setdefault(a, lineno)
        elif directive == "clause":
            lits = []
            for tok in args:
                lits.append(Literal(_atom(tok[1:] if tok.startswith("-") else tok, lineno),
                                    not tok.startswith("-")))
            clauses.append(make_clause(lits))
        elif directive == "given":
            if not args or args[-1] != ";":
                raise ParseError("given set must end with ';'", lineno)
            current: list[str] = []
            for tok in args:
                if tok != ";":
                    current.append(_atom(tok, lineno))
                    continue
                s = frozenset(current)
                if s in given_line:
                    raise ParseError(f"duplicate given set {{{' '.join(sorted(s))}}} "
                                     f"(first on line {given_line[s]})", lineno)
                given_line[s] = lineno
                given.append(s)
                current = []
        elif directive == "candidate":
            candidate = (candidate or frozenset()) | frozenset(_atom(t, lineno) for t in args)
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)
    problem = AbductionProblem(frozenset(hyps), frozenset(mans), CnfFormula(tuple(clauses)))
    return InstanceDocument(problem, tuple(given), candidate)


def _names(atoms):
    return " ".join(sorted(atoms))


def print_instance(doc: InstanceDocument) -> str:
    p = doc.problem
    lines = []
    if p.hypotheses:
        lines.append("hyp " + _names(p.hypotheses))
    if p.manifestations:
        lines.append("man " + _names(p.manifestations))
    for c in p.theory.clauses:
        lines.append(" ".join(["clause"] + [str(l) for l in c.sorted()]))
    for g in doc.given:
        lines.append(" ".join(["given"] + sorted(g) + [";"]))
    if doc.candidate is not None:
        lines.append(" ".join(["candidate"] + sorted(doc.candidate)))
    return "".join(line + "\n" for line in lines)


def normalize_width3(doc: InstanceDocument) -> InstanceDocument:
    """Split clauses wider than three with fresh chaining atoms.

    ``l1 | l2 | ... | lk`` becomes ``l1 | l2 | z1``, ``-z1 | l3 | z2``, ...,
    ``-z(k-3) | l(k-1) | lk``. The chaining atoms are neither hypotheses nor
    manifestations, so the explanations are unchanged.
    """
    p = doc.problem
    wide = [c for c in p.theory.clauses if c.width > 3]
    if not wide:
        return doc
    zs = iter(fresh_atoms(p.universe, sum(c.width - 3 for c in wide), "z"))
    out = []
    for c in p.theory.clauses:
        if c.width <= 3:
            out.append(c)
            continue
        lits = list(c.sorted())
        z = next(zs)
        out.append(make_clause([lits[0], lits[1], Literal(z)]))
        for lit in lits[2:-2]:
            nz = next(zs)
            out.append(make_clause([Literal(z, False), lit, Literal(nz)]))
            z = nz
        out.append(make_clause([Literal(z, False), lits[-2], lits[-1]]))
    theory = CnfFormula(tuple(out), p.universe | {a for c in out for a in c.atoms})
    return InstanceDocument(AbductionProblem(p.hypotheses, p.manifestations, theory),
                            doc.given, doc.candidate)
