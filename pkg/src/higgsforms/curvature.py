"""Pointwise Higgs curvature from frame data, Bochner forms and the flat HHYM table.

Matrices of forms follow the frame convention ``theta e_a = sum_b e_b (x) theta[b][a]``:
the row index is the upper (output) frame index.  Derivative data (``d theta``
and ``dbar thetabar``) are inputs, not computed; the flat constant model has
them equal to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence

from .exterior import Form, FrameVector, interior, wedge
from .higgs import HiggsField, T_operator, f_table, theta, theta_adjoint
from .linalg import dense_inverse
from .metric import MetricSpec, norm2
from .scalar import ONE, ZERO, Scalar
from .slope import trivial_action_test

__all__ = [
    "PointFrameData",
    "PointCurvature",
    "adjoint_matrix",
    "assemble_F",
    "matrix_wedge",
    "evaluate",
    "higgs_frame_data",
    "holomorphic_basis",
    "form_to_vector",
    "vector_to_form",
    "crv_operator",
    "bochner_value",
    "bochner_from_curvature",
    "iLambda_F",
    "iLambda_F_from_curvature",
    "hhym_flat",
    "hhym_bookkeeping",
    "trivial_action_test",
]

FormMatrix = List[List[Form]]


def _zeros(n: int, r: int) -> FormMatrix:
    return [[Form(n) for _ in range(r)] for _ in range(r)]


def _check_type(mat: FormMatrix, t, name: str) -> None:
    for row in mat:
        for f in row:
            g = f.grades()
            if g and g != {t}:
                raise ValueError(f"{name} entries must be of type {t}, found {sorted(g)}")


@dataclass
class PointFrameData:
    """Connection, curvature and Higgs data of a rank-``r`` bundle at one point."""

    dim: int
    h_gram: List[List[Scalar]]
    theta_mat: FormMatrix
    C: Optional[FormMatrix] = None
    Theta: Optional[FormMatrix] = None
    d_theta: Optional[FormMatrix] = None
    d_theta_bar: Optional[FormMatrix] = None

    def __post_init__(self):
        r = len(self.h_gram)
        if any(len(row) != r for row in self.h_gram):
            raise ValueError("h_gram must be square")
        if len(self.theta_mat) != r or any(len(row) != r for row in self.theta_mat):
            raise ValueError("theta_mat must be r x r")
        n = self.dim
        if self.C is None:
            self.C = _zeros(n, r)
        if self.Theta is None:
            self.Theta = _zeros(n, r)
        if self.d_theta is None:
            self.d_theta = _zeros(n, r)
        for mat, t, name in ((self.theta_mat, (1, 0), "theta"), (self.C, (1, 0), "C"),
                             (self.Theta, (1, 1), "Theta"), (self.d_theta, (2, 0), "d_theta")):
            if len(mat) != r or any(len(row) != r for row in mat):
                raise ValueError(f"{name} must be {r} x {r}")
            _check_type(mat, t, name)
        if self.d_theta_bar is not None:
            _check_type(self.d_theta_bar, (0, 2), "d_theta_bar")

    @property
    def rank(self) -> int:
        return len(self.h_gram)

    @property
    def is_adapted(self) -> bool:
        r = self.rank
        return all(self.h_gram[i][j] == (ONE if i == j else ZERO) for i in range(r) for j in range(r))

    def metric_spec(self, basis: Sequence[int]) -> MetricSpec:
        """Diagonal gram over word masks ``basis`` as a :class:`MetricSpec`."""
        r = self.rank
        ww = {}
        for i in range(r):
            for j in range(r):
                v = self.h_gram[i][j]
                if i != j and v:
                    raise ValueError("only diagonal grams convert to a MetricSpec")
            d = self.h_gram[i][i]
            if not d.is_real() or d.re <= 0:
                raise ValueError("gram diagonal must be positive real")
            ww[basis[i]] = d.re
        return MetricSpec(word_weights=ww)


@dataclass
class PointCurvature:
    F20: FormMatrix
    F11: FormMatrix
    F02: FormMatrix


def matrix_wedge(A: FormMatrix, B: FormMatrix) -> FormMatrix:
    """``(A ^ B)[b][a] = sum_c A[b][c] ^ B[c][a]``."""
    r = len(A)
    n = A[0][0].dim
    out = _zeros(n, r)
    for b in range(r):
        for c in range(r):
            x = A[b][c]
            if not x:
                continue
            for a in range(r):
                y = B[c][a]
                if y:
                    out[b][a] = out[b][a] + wedge(x, y)
    return out


def _madd(*mats: FormMatrix) -> FormMatrix:
    r = len(mats[0])
    return [[sum((m[i][j] for m in mats[1:]), mats[0][i][j]) for j in range(r)] for i in range(r)]


def _h_adjoint_forms(mat: FormMatrix, gram: List[List[Scalar]]) -> FormMatrix:
    # out[b][a] = sum_{g,k} G[b][g] conj(mat[k][g]) H[a][k] with G = conj(H^{-1}),
    # the index placement that makes out the h-adjoint of mat.
    r = len(gram)
    n = mat[0][0].dim
    inv = dense_inverse(gram)
    G = [[inv[i][j].conjugate() for j in range(r)] for i in range(r)]
    conj_t = [[mat[k][g].conj() for k in range(r)] for g in range(r)]  # conj_t[g][k]
    out = _zeros(n, r)
    for b in range(r):
        for g in range(r):
            if not G[b][g]:
                continue
            for k in range(r):
                x = conj_t[g][k]
                if not x:
                    continue
                xb = x.scale(G[b][g])
                for a in range(r):
                    if gram[a][k]:
                        out[b][a] = out[b][a] + xb.scale(gram[a][k])
    return out


def adjoint_matrix(data: PointFrameData) -> FormMatrix:
    """``thetabar_h[b][a] = sum h^{b g} conj(theta[k][g]) h_{a k}``: (0,1)-form entries."""
    try:
        return _h_adjoint_forms(data.theta_mat, data.h_gram)
    except ZeroDivisionError:
        raise ValueError("h_gram is singular") from None


def assemble_F(data: PointFrameData) -> PointCurvature:
    """The three components of the Higgs curvature.

    ``F20 = d theta + C^theta + theta^C``, ``F02 = dbar thetabar_h`` and
    ``F11 = Theta + theta^thetabar_h + thetabar_h^theta``.  When
    ``d_theta_bar`` is absent it is taken to be the ``h``-adjoint image of
    ``d_theta``, which is exact when ``h`` has vanishing derivative at the
    point (constant or adapted frames).
    """
    tb = adjoint_matrix(data)
    F20 = _madd(data.d_theta, matrix_wedge(data.C, data.theta_mat), matrix_wedge(data.theta_mat, data.C))
    F02 = data.d_theta_bar if data.d_theta_bar is not None else _h_adjoint_forms(data.d_theta, data.h_gram)
    F11 = _madd(data.Theta, matrix_wedge(data.theta_mat, tb), matrix_wedge(tb, data.theta_mat))
    return PointCurvature(F20, F11, F02)


def evaluate(mat: FormMatrix, X: FrameVector, Y: Optional[FrameVector] = None) -> List[List[Scalar]]:
    """Entrywise evaluation ``alpha(X)`` (1-forms) or ``alpha(X, Y) = i(Y) i(X) alpha``."""
    out = []
    for row in mat:
        vals = []
        for f in row:
            g = interior(X, f)
            if Y is not None:
                g = interior(Y, g)
            vals.append(g.coeff(0))
        out.append(vals)
    return out


def _mm(A, B):
    r = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(r)), ZERO) for j in range(r)] for i in range(r)]


def crv_operator(data: PointFrameData, Z: FrameVector, Wbar: FrameVector) -> List[List[Scalar]]:
    """``Theta(Z, Wbar) + [theta(Z), thetabar_h(Wbar)]`` composed as operators."""
    r = data.rank
    Th = evaluate(data.Theta, Z, Wbar)
    A = evaluate(data.theta_mat, Z)
    B = evaluate(adjoint_matrix(data), Wbar)
    AB, BA = _mm(A, B), _mm(B, A)
    return [[Th[i][j] + AB[i][j] - BA[i][j] for j in range(r)] for i in range(r)]


# -- the Higgs bundle E = sum_p Lambda^(p,0) as frame data --------------------

def holomorphic_basis(n: int) -> List[int]:
    """Frame of ``E``: holomorphic word masks ordered by degree, then mask."""
    return sorted(range(1 << n), key=lambda m: (m.bit_count(), m))


def form_to_vector(s: Form, basis: Sequence[int]) -> List[Scalar]:
    pos = {m: i for i, m in enumerate(basis)}
    v = [ZERO] * len(basis)
    for m, c in s.items():
        if m not in pos:
            raise ValueError("form has components outside the frame")
        v[pos[m]] = c
    return v


def vector_to_form(n: int, v: Sequence[Scalar], basis: Sequence[int]) -> Form:
    return Form(n, {basis[i]: c for i, c in enumerate(v) if c})


def higgs_frame_data(H: HiggsField, h: Optional[MetricSpec] = None,
                     Theta: Optional[FormMatrix] = None,
                     d_theta: Optional[FormMatrix] = None) -> PointFrameData:
    """Frame data of ``(E, theta)`` in the word frame, ``C = 0`` (flat constant model)."""
    n = H.dim
    basis = holomorphic_basis(n)
    pos = {m: i for i, m in enumerate(basis)}
    r = len(basis)
    gram = [[ZERO] * r for _ in range(r)]
    for i, m in enumerate(basis):
        gram[i][i] = Scalar(h.weight(m, n)) if h is not None else ONE
    tm = _zeros(n, r)
    for j in range(1, n + 1):
        dzj = Form.dz(n, j)
        for a, m in enumerate(basis):
            out = theta(H, j, Form(n, {m: ONE}))
            for mb, c in out.items():
                tm[pos[mb]][a] = tm[pos[mb]][a] + dzj.scale(c)
    return PointFrameData(n, gram, tm, Theta=Theta, d_theta=d_theta)


def _quad(M: List[List[Scalar]], v: Sequence[Scalar], gram: List[List[Scalar]]) -> Scalar:
    r = len(v)
    Mv = [sum((M[i][j] * v[j] for j in range(r)), ZERO) for i in range(r)]
    return sum((Mv[b] * v[d].conjugate() * gram[b][d] for b in range(r) for d in range(r)
                if gram[b][d]), ZERO)


def bochner_value(data: PointFrameData, H: HiggsField, Z: FrameVector, s: Form) -> Fraction:
    """``h(Theta(Z,Zbar)s, s) + ||thetabar_h(Zbar) s||^2 - ||theta(Z) s||^2``.

    The Higgs terms are computed with the form operators of :mod:`higgs`;
    ``data`` supplies ``Theta`` and the (diagonal) metric.
    """
    basis = holomorphic_basis(H.dim)
    h = data.metric_spec(basis)
    v = form_to_vector(s, basis)
    curv = _quad(evaluate(data.Theta, Z, Z.bar()), v, data.h_gram)
    total = curv + Scalar(norm2(theta_adjoint(H, Z.bar(), s, h), h) - norm2(theta(H, Z, s), h))
    if not total.is_real():
        raise ArithmeticError("Bochner form is not real; Theta is not Hermitian")
    return total.re


def bochner_from_curvature(data: PointFrameData, Z: FrameVector, s_vec: Sequence[Scalar]) -> Scalar:
    """``h(F_h(Z, Zbar) s, s)`` using the assembled ``F11``."""
    F = assemble_F(data)
    return _quad(evaluate(F.F11, Z, Z.bar()), s_vec, data.h_gram)


def iLambda_F(data: PointFrameData, H: HiggsField, s: Form) -> Form:
    """``i Lambda F_h s = sum_i Theta(Z_i, Zbar_i) s + T_h(s)``."""
    n = H.dim
    basis = holomorphic_basis(n)
    h = data.metric_spec(basis)
    v = form_to_vector(s, basis)
    r = len(basis)
    acc = [ZERO] * r
    for i in range(1, n + 1):
        M = evaluate(data.Theta, FrameVector.Z(n, i), FrameVector.Zbar(n, i))
        for b in range(r):
            acc[b] = acc[b] + sum((M[b][a] * v[a] for a in range(r)), ZERO)
    return vector_to_form(n, acc, basis) + T_operator(H, s, h)


def iLambda_F_from_curvature(data: PointFrameData) -> List[List[Scalar]]:
    """``sum_i F11(Z_i, Zbar_i)`` as a matrix in the frame."""
    n = data.dim
    F = assemble_F(data)
    r = data.rank
    out = [[ZERO] * r for _ in range(r)]
    for i in range(1, n + 1):
        M = evaluate(F.F11, FrameVector.Z(n, i), FrameVector.Zbar(n, i))
        out = [[out[a][b] + M[a][b] for b in range(r)] for a in range(r)]
    return out


def hhym_flat(n: int, lam, C) -> Dict[int, Fraction]:
    """Quadratic coefficients ``c_p`` of conformal factors ``f_p = c_p sum |z_i|^2``.

    The Laplacian target is ``C - binom(n-1,p-1) lam - f[p]`` and the
    normalisation ``Laplacian(sum |z_i|^2) = n`` gives
    ``c_p = (C - binom(n-1,p-1) lam - f[p]) / n``.
    """
    lam, C = Fraction(lam), Fraction(C)
    f = f_table(n)
    return {p: (C - _binom0(n, p) * lam - f[p]) / n for p in range(n + 1)}


def _binom0(n: int, p: int) -> int:
    return 0 if p == 0 else comb(n - 1, p - 1)


def hhym_bookkeeping(n: int, lam, C, coeffs: Dict[int, Fraction]) -> bool:
    """``n c_p + binom(n-1,p-1) lam + f[p] == C`` for every degree."""
    lam, C = Fraction(lam), Fraction(C)
    f = f_table(n)
    return all(n * coeffs[p] + _binom0(n, p) * lam + f[p] == C for p in range(n + 1))
