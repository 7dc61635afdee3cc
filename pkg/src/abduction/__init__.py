"""Propositional abduction: explanations, minimal and second-best explanations,
the gadgets relating these problems, and a brute-force reference oracle."""
from .brute import bf_is_solution, bf_query, bf_sol, bf_sol_min
from .engine import (enumerate_solutions, find_min_size, find_next_best, is_minimal_solution,
                     is_solution, minimal_remaining, next_best_check, next_sol_check,
                     other_minimal_check)
from .errors import *  # noqa: F401,F403
from .logic import Clause, CnfFormula, Literal, clause_universe, neg, pos
from .problem import AbductionProblem, Ordering, validate_problem
from .reductions import (GadgetMap, Instance, add_solution_gadget, cardinality_flatten, class_of,
                         clause_selector_reduction, equalize, lift_solution, pad_instance,
                         project_solution, representative, subset_clause_selector_reduction)
from .sat import Solver, SatResult, entails_all, is_consistent, solve
from .textformat import InstanceDocument, normalize_width3, parse_instance, print_instance

__version__ = "0.1.0"
