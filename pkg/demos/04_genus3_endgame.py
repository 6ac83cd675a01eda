"""K(1,0,0,0,0,0,0): the one case where the ratio test alone is not enough.

Here F = 4 is an integer, so every p is admissible. From p = 17 on the
asymptotic bound keeps sigma/p below 4; below that an exact table leaves
only p = 5, and the slope identity 4 (q + q') a2 = -sigma(K,p) then asks for
q + q' = -5/9.
"""
from cosmetic_pretzel import PretzelKnot, cass_slope_sum, decide, sigma_table, strong_ratio

k = PretzelKnot((1, 0, 0, 0, 0, 0, 0))
f = strong_ratio(k).value
print(f"{k}: F = {f}")

rows = sigma_table(k, 52)
print("\n  p  sigma/p")
for s in rows:
    mark = "  <- equals F" if s.ratio == f else ""
    print(f"{s.p:>3}  {str(s.ratio):>7}{mark}")

print(f"\nq + q' at p = 5: {cass_slope_sum(k, 5)} (not an integer)")

v = decide(k)
print("\nVerdict:", v.outcome)
for r in v.reasons:
    if r.stage >= 3 and (r.criterion != "p-signature-mismatch"):
        print("  stage", r.stage, "-", r.statement)
print("  plus", sum(r.criterion == "p-signature-mismatch" for r in v.reasons), "p-signature mismatches")
