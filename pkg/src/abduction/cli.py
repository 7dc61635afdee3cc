"""Command-line front end.

``abduction COMMAND [FILE] [flags]`` reads an instance document (see
:mod:`abduction.textformat`) from FILE or standard input.

Exit codes: 0 for YES or at least one result, 1 for NO or no result,
2 for malformed input, 3 for semantic errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from itertools import islice

from . import engine
from .brute import bf_sol, minimal
from .errors import AbductionError, ParseError
from .problem import format_set, sort_key
from .reductions import (add_solution_gadget, cardinality_flatten, clause_selector_reduction,
                         lift_solution, pad_with_map, subset_clause_selector_reduction)
from .textformat import InstanceDocument, parse_instance, print_instance
from .verify import GADGETS, random_instance, verify_lemma

COMMANDS = ("check", "minimal", "next", "next-best", "other-minimal", "solve", "enumerate",
            "min-size", "reduce", "verify-lemma", "oracle")

OK, NO, PARSE, SEMANTIC = 0, 1, 2, 3


@dataclass
class Flags:
    ordering: str = "none"
    limit: int | None = None
    gadget: str | None = None
    width: int = 3
    target: int | None = None
    seed: int | None = None
    deterministic: bool = False


def _verdict(yes):
    return (OK, "YES\n") if yes else (NO, "NO\n")


def _lines(sets):
    sets = list(sets)
    return (OK if sets else NO), "".join(format_set(s) + "\n" for s in sets)


def _need_candidate(doc):
    if doc.candidate is None:
        raise AbductionError("this command needs a 'candidate' line")
    return doc.candidate


def _gadget_block(kind, gm):
    out = [f"# gadget: {kind}"]
    for role, atoms in gm.fresh.items():
        out.append(f"# {role}: " + (atoms if isinstance(atoms, str) else " ".join(atoms)))
    if gm.index:
        out.append("# index: " + " ".join(gm.index))
    return "".join(line + "\n" for line in out)


def _reduce(doc, flags):
    p, kind = doc.problem, flags.gadget
    if kind is None:
        raise AbductionError("reduce needs --gadget")
    if kind in ("selector", "subset-selector"):
        build = subset_clause_selector_reduction if kind == "subset-selector" else clause_selector_reduction
        q, h2, gm = build(p, doc.candidate or (), flags.width)
        out = InstanceDocument(q, (), h2)
    else:
        if kind == "adding":
            q, gm = add_solution_gadget(p)
        elif kind == "flatten":
            q, gm = cardinality_flatten(p)
        else:
            if flags.target is None:
                raise AbductionError("reduce --gadget pad needs --target")
            (cand, q), gm = pad_with_map((doc.candidate or frozenset(), p), flags.target)
        given = tuple(lift_solution(gm, g) for g in doc.given)
        cand = None if doc.candidate is None else lift_solution(gm, doc.candidate)
        out = InstanceDocument(q, given, cand)
    return OK, _gadget_block(kind, gm) + print_instance(out)


def run(command: str, doc: InstanceDocument | None, flags: Flags | None = None) -> tuple[int, str]:
    """Execute one command; returns ``(exit_status, output_text)``.

    Semantic errors propagate as :class:`AbductionError`; :func:`main` maps
    them to exit status 3.
    """
    flags = flags or Flags()
    if command == "verify-lemma":
        if flags.gadget is None:
            raise AbductionError("verify-lemma needs --gadget")
        if doc is None:
            doc = InstanceDocument(random_instance(flags.gadget, flags.seed or 0, flags.width))
        report = verify_lemma(doc.problem, flags.gadget, width=flags.width,
                              target=flags.target, candidate=doc.candidate)
        if report.ok:
            return OK, "OK\n"
        return NO, f"# counterexample ({report.gadget}): {report.problem}\n" + print_instance(doc)
    p, given, order = doc.problem, doc.given, flags.ordering
    if command == "check":
        return _verdict(engine.is_solution(p, _need_candidate(doc)))
    if command == "minimal":
        return _verdict(engine.is_minimal_solution(p, _need_candidate(doc), order))
    if command == "next":
        return _verdict(engine.next_sol_check(p, given, _need_candidate(doc)))
    if command == "next-best":
        return _verdict(engine.next_best_check(p, given, _need_candidate(doc), order))
    if command == "other-minimal":
        return _verdict(engine.other_minimal_check(p, given, _need_candidate(doc), order))
    if command == "solve":
        found = engine.find_next_best(p, given, order)
        return _lines([] if found is None else [found])
    if command == "enumerate":
        return _lines(engine.enumerate_solutions(p, order, given, flags.limit,
                                                 deterministic=flags.deterministic))
    if command == "min-size":
        k = engine.find_min_size(p)
        return (NO, "") if k is None else (OK, f"{k}\n")
    if command == "oracle":
        given_sets = {frozenset(g) for g in given}
        best = sorted(minimal(bf_sol(p) - given_sets, order), key=lambda s: (len(s), sort_key(s)))
        return _lines(islice(best, flags.limit))
    if command == "reduce":
        return _reduce(doc, flags)
    raise ValueError(f"unknown command {command!r}")


def build_parser():
    ap = argparse.ArgumentParser(prog="abduction", description="Propositional abduction toolkit.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("file", nargs="?", help="instance document (default: standard input)")
    ap.add_argument("--ordering", choices=("none", "subset", "card"), default="none")
    ap.add_argument("--limit", type=int)
    ap.add_argument("--gadget", choices=GADGETS)
    ap.add_argument("--width", type=int, default=3)
    ap.add_argument("--target", type=int)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--deterministic", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    flags = Flags(args.ordering, args.limit, args.gadget, args.width, args.target, args.seed,
                  args.deterministic)
    try:
        if args.command == "verify-lemma" and args.file is None and args.seed is not None:
            doc = None
        elif args.file in (None, "-"):
            doc = parse_instance(sys.stdin.read())
        else:
            with open(args.file) as fh:
                doc = parse_instance(fh.read())
        status, text = run(args.command, doc, flags)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return PARSE
    except AbductionError as e:
        print(f"error: {e}", file=sys.stderr)
        return SEMANTIC
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
