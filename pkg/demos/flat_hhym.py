"""Conformal coefficients for a flat Higgs-Hermitian-Yang-Mills construction.

Each degree p gets c_p with n c_p + binom(n-1, p-1) lambda + f[p] = C.  The
pointwise curvature check then shows the trace iLambda F acting as
lambda + f[p] on degree-p frame vectors when the base curvature is scalar.
"""

from fractions import Fraction

from higgsforms import Form, HiggsField, f_table
from higgsforms.curvature import hhym_flat, higgs_frame_data, iLambda_F

for n in (3, 5):
    print(f"n={n}, lambda=0, C=0:", {p: str(c) for p, c in hhym_flat(n, 0, 0).items()})
print("n=3, lambda=1/2, C=1:", {p: str(c) for p, c in hhym_flat(3, Fraction(1, 2), 1).items()})

n = 3
lam = Fraction(7, 3)
kahler = sum((Form.word(n, [i], [i]) for i in range(1, n + 1)), Form(n)).scale(lam / n)
r = 1 << n
Theta = [[kahler if a == b else Form(n) for a in range(r)] for b in range(r)]
H = HiggsField.top(n)
data = higgs_frame_data(H, Theta=Theta)
print(f"\nscalar base curvature lambda = {lam}, omega = dz1^dz2^dz3")
for s in (Form.one(n), Form.dz(n, 1), Form.dz(n, 1, 2), Form.dz(n, 1, 2, 3)):
    (m, _), = s.items()
    out = iLambda_F(data, H, s)
    p = m.bit_count()
    print(f"  degree {p}: iLambda F s = {out.coeff(m)} s   (lambda + f[p] = {lam + f_table(n)[p]})")
