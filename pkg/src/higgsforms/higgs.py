"""The Higgs operator induced by an odd holomorphic form and its companions.

For a holomorphic form ``w`` the Higgs field acts on ``E = sum_p Lambda^(p,0)``
by ``theta(Z) phi = (i(Z) w) ^ phi``.  Everything here is pointwise linear
algebra with exact coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Optional

from .exterior import Form, FrameVector, interior, wedge
from .metric import MetricSpec, adjoint_interior, adjoint_wedge, norm2
from .scalar import Scalar

__all__ = [
    "HiggsField",
    "theta",
    "theta_adjoint",
    "commutator",
    "super_commutator",
    "T_operator",
    "f_table",
    "F_table",
    "simple_T_expansion",
    "kernel_test",
    "adjoint_kernel_test",
    "kernel_brute_force",
    "adjoint_kernel_brute_force",
    "T_quadratic_form",
    "weighted_trace",
]


class HiggsField:
    """A nonzero holomorphic form ``omega`` packaged as a Higgs field.

    Every component must have odd holomorphic degree and no anti-holomorphic
    part.  ``allow_even=True`` admits a pure even degree, which only makes
    sense with :func:`super_commutator`.
    """

    __slots__ = ("omega", "degrees")

    def __init__(self, omega: Form, *, allow_even: bool = False):
        if not omega:
            raise ValueError("omega must be nonzero")
        types = omega.grades()
        if any(q for _, q in types):
            raise ValueError("omega must be holomorphic (type (k,0))")
        degrees = sorted({p for p, _ in types})
        if allow_even:
            if len(degrees) > 1 and len({p % 2 for p in degrees}) > 1:
                raise ValueError("omega mixes even and odd degrees")
        elif any(p % 2 == 0 for p in degrees):
            raise ValueError(f"omega must have odd degrees only, got {degrees}")
        self.omega = omega
        self.degrees = tuple(degrees)

    @property
    def dim(self) -> int:
        return self.omega.dim

    @property
    def k(self) -> int:
        """The degree of ``omega``; only defined when it is pure."""
        if len(self.degrees) != 1:
            raise ValueError(f"omega is not of pure degree: {self.degrees}")
        return self.degrees[0]

    @property
    def is_pure(self) -> bool:
        return len(self.degrees) == 1

    @classmethod
    def top(cls, n: int, coeff=1) -> "HiggsField":
        return cls(Form.dz(n, *range(1, n + 1)).scale(coeff))

    def contracted(self, j: int) -> Form:
        """``i(Z_j) omega``."""
        return interior(FrameVector.Z(self.dim, j), self.omega)

    def __repr__(self):
        return f"HiggsField(n={self.dim}, degrees={self.degrees}, omega={self.omega})"


def _as_frame(H: HiggsField, Z) -> FrameVector:
    if isinstance(Z, int):
        return FrameVector.Z(H.dim, Z)
    return Z


def theta(H: HiggsField, Z, phi: Form) -> Form:
    """``theta(Z) phi = (i(Z) omega) ^ phi``.  ``Z`` is holomorphic (or an index)."""
    Z = _as_frame(H, Z)
    if Z.dim != H.dim or phi.dim != H.dim:
        raise ValueError("dimension mismatch")
    if not Z.is_holomorphic:
        raise ValueError("theta takes a holomorphic tangent vector")
    return wedge(interior(Z, H.omega), phi)


def theta_adjoint(H: HiggsField, Zbar, phi: Form, h: Optional[MetricSpec] = None) -> Form:
    """``thetabar_h(Zbar) phi``, the ``h``-adjoint of ``theta(Z)``.

    ``Zbar`` is an anti-holomorphic vector (or an index ``j`` meaning
    ``Zbar_j``).  For the standard metric this is ``i((i(Z) omega)#) phi``.
    """
    if isinstance(Zbar, int):
        Zbar = FrameVector.Zbar(H.dim, Zbar)
    if not Zbar.is_antiholomorphic:
        raise ValueError("theta_adjoint takes an anti-holomorphic tangent vector")
    Z = Zbar.bar()
    return adjoint_wedge(interior(Z, H.omega), phi, h)


def commutator(H: HiggsField, Z, W, phi: Form) -> Form:
    """``[theta(Z), theta(W)] phi``."""
    return theta(H, Z, theta(H, W, phi)) - theta(H, W, theta(H, Z, phi))


def super_commutator(H: HiggsField, Z, W, phi: Form) -> Form:
    """Graded bracket ``AB - (-1)^((k-1)^2) BA`` with ``A = theta(Z)``, ``B = theta(W)``.

    ``theta(Z)`` wedges by a form of degree ``k - 1``, so this is the plain
    commutator for odd ``k`` and the anticommutator for even ``k``; in both
    cases it vanishes identically.
    """
    parity = (H.degrees[0] - 1) % 2
    ab = theta(H, Z, theta(H, W, phi))
    ba = theta(H, W, theta(H, Z, phi))
    return ab + ba if parity else ab - ba


def T_operator(H: HiggsField, s: Form, h: Optional[MetricSpec] = None) -> Form:
    """``T_h(s) = sum_j [theta(Z_j), thetabar_h(Zbar_j)] s``."""
    n = H.dim
    out = Form(n)
    for j in range(1, n + 1):
        out = out + theta(H, j, theta_adjoint(H, j, s, h))
        out = out - theta_adjoint(H, j, theta(H, j, s), h)
    return out


def f_table(n: int) -> Dict[int, Fraction]:
    """Eigenvalues of ``T`` on ``Lambda^(i,0)`` for a unit top-degree ``omega``."""
    if not isinstance(n, int) or n <= 1 or n % 2 == 0:
        raise ValueError(f"f_table needs an odd n > 1, got {n!r}")
    table = {i: Fraction(0) for i in range(n + 1)}
    table[0] = Fraction(-n)
    table[1] = Fraction(-1)
    table[n - 1] = Fraction(1)
    table[n] = Fraction(n)
    return table


def F_table(k: int) -> Dict[int, Fraction]:
    """Eigenvalues of ``T`` on forms built from the span of a unit simple ``k``-form.

    Determined by applying :func:`T_operator` to one basis word of each
    degree of ``dz_1 ^ ... ^ dz_k``, rather than from a printed table.
    """
    if not isinstance(k, int) or k < 3 or k % 2 == 0:
        raise ValueError(f"F_table needs an odd k >= 3, got {k!r}")
    H = HiggsField(Form.dz(k, *range(1, k + 1)))
    table = {}
    for i in range(k + 1):
        s = Form.dz(k, *range(1, i + 1))
        t = T_operator(H, s)
        ratio = t.coeff(next(iter(s)))
        if t != s.scale(ratio):
            raise ArithmeticError(f"degree {i} word is not an eigenvector of T")
        assert ratio.is_real()
        table[i] = ratio.re
    return table


def _simple_blade(H: HiggsField):
    w = H.omega
    if len(w) != 1:
        raise ValueError("omega is not a simple (monomial) form")
    (mask, coeff), = w.items()
    bits = [b for b in range(H.dim) if (mask >> b) & 1]
    return bits, coeff


def simple_T_expansion(H: HiggsField, s: Form) -> Form:
    """Closed-form ``T(s)`` for ``omega = a dz_{i_1} ^ ... ^ dz_{i_k}``.

    ``T(s) = -|a|^2 { k s + sum_{r=1}^{min(k-2, deg s)} (k - r)(-1)^r
    sum_{|S| = r} eps(dz_S) i(dz_S#) s }`` with ``S`` running over
    ``r``-subsets of the blade's indices.
    """
    from itertools import combinations

    bits, a = _simple_blade(H)
    k = len(bits)
    if k % 2 == 0 or k < 3:
        raise ValueError(f"the expansion needs an odd degree k >= 3, got {k}")
    n = H.dim
    degs = {p for p, _ in s.grades()}
    if any(q for _, q in s.grades()):
        raise ValueError("s must be holomorphic")
    top_deg = max(degs) if degs else 0
    acc = s.scale(k)
    for r in range(1, min(k - 2, top_deg) + 1):
        part = Form(n)
        for sub in combinations(bits, r):
            blade = Form.dz(n, *(b + 1 for b in sub))
            part = part + wedge(blade, adjoint_wedge(blade, s))
        acc = acc + part.scale((k - r) * (-1) ** r)
    return acc.scale(-a.abs2())


def kernel_test(H: HiggsField, phi: Form) -> bool:
    """``theta(phi) == 0`` via ``omega ^ phi == 0`` and ``omega ^ i(Z_j) phi == 0``."""
    H.k  # characterization needs pure degree
    n = H.dim
    if wedge(H.omega, phi):
        return False
    return all(not wedge(H.omega, interior(FrameVector.Z(n, j), phi)) for j in range(1, n + 1))


def adjoint_kernel_test(H: HiggsField, phi: Form, h: Optional[MetricSpec] = None) -> bool:
    """``thetabar_h(phi) == 0`` via ``eps(omega)^* phi == 0`` and
    ``eps(omega)^* i(Z_j)^* phi == 0`` for all ``j``."""
    H.k
    n = H.dim
    if adjoint_wedge(H.omega, phi, h):
        return False
    return all(
        not adjoint_wedge(H.omega, adjoint_interior(FrameVector.Z(n, j), phi, h), h)
        for j in range(1, n + 1)
    )


def kernel_brute_force(H: HiggsField, phi: Form) -> bool:
    return all(not theta(H, j, phi) for j in range(1, H.dim + 1))


def adjoint_kernel_brute_force(H: HiggsField, phi: Form, h: Optional[MetricSpec] = None) -> bool:
    return all(not theta_adjoint(H, j, phi, h) for j in range(1, H.dim + 1))


def T_quadratic_form(H: HiggsField, s: Form, h: Optional[MetricSpec] = None) -> Scalar:
    """``sum_j ||thetabar(Zbar_j) s||^2 - ||theta(Z_j) s||^2`` as a Scalar."""
    total = Fraction(0)
    for j in range(1, H.dim + 1):
        total += norm2(theta_adjoint(H, j, s, h), h) - norm2(theta(H, j, s), h)
    return Scalar(total)


def weighted_trace(table: Dict[int, Fraction], n: int) -> Fraction:
    """``sum_i binom(n, i) table[i]`` -- the trace of ``T`` over ``sum_i Lambda^(i,0)``."""
    return sum((comb(n, i) * v for i, v in table.items()), Fraction(0))
