"""The Hodge star on complex forms and the adjoints it induces.

The star is fixed by a ^ *conj(b) = <a, b> vol with vol = omega^n / n!, so it
swaps (p, q) with (n - q, n - p), squares to (-1)^(p+q) and is an isometry.
"""

from higgsforms import Form, FrameVector, hodge_star, inner, interior
from higgsforms.metric import adjoint_interior, volume_form

n = 2
print("vol =", volume_form(n))
for f in (Form.one(n), Form.dz(n, 1), Form.dzbar(n, 2), Form.word(n, [1], [1]), Form.dz(n, 1, 2)):
    print(f"  *({f}) = {hodge_star(f)}")

a = Form.dz(n, 1).scale(2) + Form.word(n, [2], [1])
b = Form.dz(n, 1) + Form.word(n, [2], [1]).scale(3)
print("\n<a, b> =", inner(None, a, b), " <*a, *b> =", inner(None, hodge_star(a), hodge_star(b)))

Z = FrameVector.Z(n, 1)
c = Form.dz(n, 1, 2)
d = Form.dz(n, 2)
print("<i(Z1) c, d> =", inner(None, interior(Z, c), d),
      " <c, i(Z1)* d> =", inner(None, c, adjoint_interior(Z, d)))
