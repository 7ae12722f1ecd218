"""x^10 + y^8 + s1 x^5y^4 + s2 x^3y^6: reducible fibers.

x^5y^4 has the same weight as the base, so the family is not
semi-quasi-homogeneous and the fibers are not parametrized
automatically.  Tau comes straight from the equation.  The residue
values need branch seeds, and those live over number fields because
the fibers split into two branches with conjugate leading terms.
"""
import time
from pathlib import Path

from curvevals.io import load_json, plan_from_json
from curvevals.strata import analyze_sample, evaluate_family
from curvevals.logres import tjurina_direct

plan = load_json(Path(__file__).parent / "data" / "plan_front_seeded.json")
F, points, seeds = plan_from_json(plan)

for pt in points:
    print(f"tau{tuple(int(x) for x in pt)} = {tjurina_direct(evaluate_family(F, pt))}")

print("\nwith seeds (a few seconds per fiber):")
for pt in points:
    t0 = time.perf_counter()
    rec = analyze_sample(F, pt, seeds=seeds[pt])
    neg = len(rec.negatives)
    print(f"  {tuple(int(x) for x in pt)}: tau {rec.tau_values}, dim R/O~ {rec.dim}, "
          f"{neg} negative values, {time.perf_counter() - t0:.1f}s")
