"""The signature function as a certified staircase.

On the unit circle z^2 = t - 2 + 1/t = 2 cos(theta) - 2, so the Alexander
roots come from the real roots of q(w) = 1 + a2 w + a4 w^2 + ... in (-4, 0).
Sturm sequences isolate them exactly and each w-interval maps to an angle
interval. The signature is 0 near theta = 0 and rises by 2 at each root.
"""
from fractions import Fraction

import mpmath

from cosmetic_pretzel import (
    PretzelKnot,
    hermitian_signature_oracle,
    p_signature,
    signature_at_angle,
    signature_profile,
)

k = PretzelKnot((1, 0, 0, 0, 0))
prof = signature_profile(k)
print(f"{k}: q(w) = {prof.wpoly.format('w')}")
for m, th in enumerate(prof.theta, start=1):
    t = prof.tighter_turns(m - 1, Fraction(1, 10**15))
    print(f"  theta_{m} / pi in [{float(2 * t.lo):.12f}, {float(2 * t.hi):.12f}]  (~{float(th.lo):.4f} rad)")

print("\nStaircase sampled at rational multiples of pi, against the Hermitian-matrix oracle:")
for r in [Fraction(1, 20), Fraction(2, 15), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]:
    exact = signature_at_angle(prof, r)
    numeric = hermitian_signature_oracle(k, mpmath.pi * r.numerator / r.denominator)
    print(f"  angle {str(r):>5} pi : staircase {exact}, oracle {numeric}")

print("\np-signatures: root theta_m contributes 2(p - 2 floor(theta_m p / 2pi) - 1).")
for p in (2, 3, 5, 15, 30):
    s = p_signature(k, p)
    print(f"  sigma(K,{p:>2}) = {s.value:>3}   sigma/p = {s.ratio}")

print("\nWhen a root of unity lands on an Alexander root the value is the average of the two sides.")
trefoil = PretzelKnot((0, 0, 0))
s = p_signature(trefoil, 6)
print(f"  {trefoil}, p = 6: sigma = {s.value}, coincidence flagged = {s.coincidence_flag}")
