"""Slopes of diagonal subbundles of E = sum_p Lambda^(p,0), and the obstruction verdicts.

Everything is a rational multiple of d = deg Lambda^(1,0) = -deg(X), so only
the sign of deg(X) matters when deciding whether a Higgs-invariant subbundle
rules out a Higgs-Hermitian-Yang-Mills metric.
"""

from higgsforms import BundleSelector, bigthm_verdict, enumerate_invariant, slope, slope_diff
from higgsforms.slope import stability_preclusion

n, k = 5, 3
E = BundleSelector.filtration(n, 0)
print(f"mu(E) = {slope(E).slope_coeff} d, "
      f"mu(even) = {slope(BundleSelector.even(n)).slope_coeff} d, "
      f"mu(odd) = {slope(BundleSelector.odd(n)).slope_coeff} d")

print("\nfiltration pieces E^a and their slopes relative to the tail E^n:")
for a in range(n):
    Ea = BundleSelector.filtration(n, a)
    print(f"  E^{a}: mu = {slope(Ea).slope_coeff} d,  mu(E^{a}) - mu(E^{n}) = "
          f"{slope_diff(Ea, BundleSelector(n, (n,)))} d,  even/odd split: {stability_preclusion(Ea, k)}")

invariant = [s for s in enumerate_invariant(n, k) if s.z >= 2]
print(f"\n{len(invariant)} Higgs-invariant selectors with at least two summands for n={n}, k={k}")
for sign in (-1, 0, 1):
    tags = {}
    for s in invariant:
        tags.setdefault(bigthm_verdict(n, k, sign, s).tag, []).append(s.degrees)
    print(f"sign deg(X) = {sign:+d}:")
    for tag, sels in sorted(tags.items()):
        print(f"  {tag}: {len(sels)} selectors, e.g. {sels[0]}")
