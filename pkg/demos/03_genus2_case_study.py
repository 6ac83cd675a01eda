"""Ruling out K(1,0,0,0,0) step by step.

A chirally cosmetic pair of p/q surgeries forces sigma(K,p)/p to equal
F = -8 a2 v3 / (7 a2^2 - a2 - 10 a4), which also pins p to multiples of the
denominator of F. The certified angles bound sigma(K,p)/p strictly below F.
"""
from fractions import Fraction

from cosmetic_pretzel import PretzelKnot, decide, full_invariants, signature_profile, strong_ratio
from cosmetic_pretzel.obstruction import ratio_window_check, weak_checks
from cosmetic_pretzel.reproduce import arc_count_bound

k = PretzelKnot((1, 0, 0, 0, 0))
inv = full_invariants(k)
print(f"{k}: a2 = {inv.a2}, a4 = {inv.a4}, v3 = {inv.v3}")

for r in weak_checks(k, inv):
    print(f"  {r.criterion:<20} {r.statement:<36} fires: {r.fires}")
r = ratio_window_check(k, inv)
print(f"  {r.criterion:<20} {r.statement:<36} fires: {r.fires}")

f = strong_ratio(k, inv).value
print(f"\nF = {f}, so p must be a multiple of {f.denominator}.")

prof = signature_profile(k)
lows = [Fraction(2, 15), Fraction(8, 15)]
print("Certified: theta_1 > 2pi/15 and theta_2 > 8pi/15:",
      all(t.lo * 2 > b for t, b in zip(prof.turns, lows)))
slope, const = arc_count_bound(lows, 15)
print(f"Counting roots of unity past each bound: sigma(K,15n) <= {slope}n - {const},")
print(f"so sigma/p < {slope}/15 = {Fraction(slope, 15)} < F = {f}.")

print("\nThe pipeline reaches the same conclusion with its own finiteness bound:")
v = decide(k)
print(" ", v.outcome)
for r in v.decisive:
    print("   -", r.statement)
