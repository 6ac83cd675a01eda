"""Checking the classification over a range, and the large-twist threshold.

Every genus-2 knot with twist sum at most 6 and every genus-3 knot with twist
sum at most 5 is decided; the all-zero torus knots are the known exceptions.
Beyond the range the twist sum alone suffices once it reaches about 2.0329 g.
"""
import sys

from cosmetic_pretzel import verify_theorems
from cosmetic_pretzel.obstruction import min_twist_sum_for_threshold

jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 1
report = verify_theorems(jobs=jobs)
d = report.to_dict()
print("Outcomes:", d["counts"])
print("Violations:", d["violations"] or "none")

print("\nDecisive criterion per knot:")
for v in report.verdicts:
    crit = ", ".join(sorted({r.criterion for r in v.decisive}))
    print(f"  {str(v.knot):<18} {v.outcome:<12} {crit}")

print("\nThreshold twist sums and the smallest slack 4|v3| - 7 g a2 seen in random splits:")
for c in d["threshold_checks"]:
    print(f"  g = {c['genus']}: s1 >= {min_twist_sum_for_threshold(c['genus'])}, min slack {c['min_slack']}")
