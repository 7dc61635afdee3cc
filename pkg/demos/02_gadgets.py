# The four instance transformations, each checked against brute force.
# Run: python demos/02_gadgets.py

from abduction import AbductionProblem
from abduction.brute import bf_is_solution, bf_sol, bf_sol_min
from abduction.corpus import e1, e2
from abduction.reductions import (add_solution_gadget, cardinality_flatten, class_of,
                                  clause_selector_reduction, lift_solution, pad_with_map)


def show(sets):
    return sorted(sorted(s) for s in sets)


# Adding one solution. {s} becomes a new explanation and old ones gain r.
q, gm = add_solution_gadget(e2())
print("SOL after adding:", show(bf_sol(q)))

# Without the u weakening the construction needs T, M and no hypotheses to be
# compatible. Here T rules out m, so {s} cannot be consistent.
blocked = AbductionProblem.of(["a"], ["m"], [["-m"]])
print("guarded:", show(bf_sol(add_solution_gadget(blocked)[0])),
      " verbatim:", show(bf_sol(add_solution_gadget(blocked, guarded=False)[0])))

# Flattening. Every explanation turns into a cardinality-minimal one of the same size.
q, gm = cardinality_flatten(e1())
print("SOL(E1):", show(bf_sol(e1())))
print("smallest after flattening:", show(bf_sol_min(q, "cardinality")))

# Clause selectors. The theory moves into the hypotheses, so the new theory
# depends only on the atoms and the clause width.
q, h2, gm = clause_selector_reduction(e2(), {"a"}, width=2)
print(len(gm.clause_index), "selectable clauses;", len(gm.selected), "selected by E2")
print("{a} explains E2:", bf_is_solution(e2(), {"a"}), " H2 explains target:", bf_is_solution(q, h2))

# Padding to a larger class keeps every verdict.
base = class_of(e2())
for m in range(base, base + 3):
    (cand, big), gm = pad_with_map((frozenset("a"), e2()), m)
    lifted = {lift_solution(gm, h) for h in bf_sol(e2())}
    print(f"class {m}: {len(big.hypotheses)} hypotheses, SOL matches lift: {bf_sol(big) == lifted}")
