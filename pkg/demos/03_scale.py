# Enumerating explanations on a 40-hypothesis instance and looking at the solver's work.
# Run: python demos/03_scale.py

import time

from abduction import enumerate_solutions, find_min_size
from abduction.corpus import scale_instance
from abduction.search import CandidateSearch

p = scale_instance(seed=0)
print(len(p.hypotheses), "hypotheses,", len(p.theory), "clauses,", len(p.manifestations), "symptoms")

start = time.perf_counter()
found = list(enumerate_solutions(p, "cardinality", limit=100))
print(f"100 explanations by size in {time.perf_counter() - start:.2f}s")
print("sizes seen:", sorted({len(s) for s in found}), " smallest possible:", find_min_size(p))

# Each round proposes a candidate and either accepts it or learns a blocking clause.
search = CandidateSearch(p)
search.find(at_most=2)
print("rounds for one size-2 query:", search.rounds)

# More symptoms push the smallest explanation up, and the number of
# candidates to refute grows quickly with it.
for n_man in (4, 8, 12):
    q = scale_instance(seed=0, n_man=n_man)
    start = time.perf_counter()
    k = find_min_size(q)
    print(f"{n_man:2d} symptoms: min size {k}, {time.perf_counter() - start:.2f}s")
