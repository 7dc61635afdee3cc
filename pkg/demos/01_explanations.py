# Explanations of a tiny diagnosis problem, step by step.
# Run: python demos/01_explanations.py

from abduction import (AbductionProblem, enumerate_solutions, find_next_best, is_minimal_solution,
                       is_solution, next_best_check, other_minimal_check)
from abduction.brute import bf_sol

# Two faults a and b both cause symptom m, but they never occur together.
p = AbductionProblem.of(["a", "b"], ["m"], [["-a", "m"], ["-b", "m"], ["-a", "-b"]])

print("is {a} an explanation?", is_solution(p, {"a"}))
print("is {a,b} an explanation?", is_solution(p, {"a", "b"}))  # inconsistent with the theory
print("all explanations:", sorted(map(sorted, enumerate_solutions(p))))

# The oracle gets the same answer by trying all four subsets against truth tables.
print("oracle agrees:", set(enumerate_solutions(p)) == bf_sol(p))

# A richer problem: a explains both symptoms, b and c only one each.
q = AbductionProblem.of("abc", ["m1", "m2"],
                        [["-a", "m1"], ["-a", "m2"], ["-b", "m1"], ["-c", "m2"]])
for order in ("subset", "cardinality"):
    print(order, "minimal explanations:",
          [sorted(h) for h in enumerate_solutions(q, order) if is_minimal_solution(q, h, order)])

# Suppose {a} was already reported. What should come next?
given = [frozenset("a")]
print("best remaining by size:", sorted(find_next_best(q, given, "cardinality")))

# {b,c} is a best remaining explanation: every other remaining one has size two or more.
print("{b,c} second best?", next_best_check(q, given, {"b", "c"}, "cardinality"))
# ... yet it is not a cardinality-minimal explanation of the whole problem.
print("{b,c} another minimal one?", other_minimal_check(q, given, {"b", "c"}, "cardinality"))
# Under the subset ordering it is minimal, since neither b nor c alone suffices.
print("{b,c} subset-minimal?", other_minimal_check(q, given, {"b", "c"}, "subset"))
