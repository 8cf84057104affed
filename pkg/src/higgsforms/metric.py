"""Hermitian metrics on the exterior algebra and their adjoint operators.

Only diagonal metrics are modelled: every basis word is orthogonal to every
other one and carries a positive rational weight.  The *standard* metric has
all weights equal to 1; a *natural* metric rescales whole degrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .exterior import Form, FrameVector, contract_bit, word_sign
from .scalar import I, ONE, ZERO, Scalar

__all__ = [
    "MetricSpec",
    "Polyvector",
    "STANDARD",
    "inner",
    "norm2",
    "sharp",
    "flat",
    "adjoint_wedge",
    "adjoint_interior",
    "volume_form",
    "hodge_star",
    "star_square_sign",
]


@dataclass(frozen=True)
class MetricSpec:
    """Diagonal Hermitian metric given by positive rational weights.

    ``type_weights`` is keyed by Hodge type ``(p, q)``; ``word_weights`` by
    combined word mask and overrides the type weight.  Anything not listed
    has weight 1.
    """

    type_weights: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)
    word_weights: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        tw = {tuple(k): Fraction(v) for k, v in dict(self.type_weights).items()}
        ww = {int(k): Fraction(v) for k, v in dict(self.word_weights).items()}
        for v in list(tw.values()) + list(ww.values()):
            if v <= 0:
                raise ValueError("metric weights must be positive")
        object.__setattr__(self, "type_weights", tw)
        object.__setattr__(self, "word_weights", ww)

    @classmethod
    def natural(cls, degree_weights: Mapping[int, Fraction]) -> "MetricSpec":
        """Rescale each ``Lambda^(p,0)`` by ``degree_weights[p]``."""
        return cls(type_weights={(p, 0): w for p, w in degree_weights.items()})

    @property
    def is_standard(self) -> bool:
        return all(w == 1 for w in self.type_weights.values()) and \
            all(w == 1 for w in self.word_weights.values())

    @property
    def is_natural(self) -> bool:
        return not self.word_weights

    def weight(self, mask: int, n: int) -> Fraction:
        if mask in self.word_weights:
            return self.word_weights[mask]
        if not self.type_weights:
            return Fraction(1)
        t = ((mask & ((1 << n) - 1)).bit_count(), (mask >> n).bit_count())
        return self.type_weights.get(t, Fraction(1))


STANDARD = MetricSpec()


def _metric(h: Optional[MetricSpec]) -> MetricSpec:
    return STANDARD if h is None else h


def inner(h: Optional[MetricSpec], f: Form, g: Form) -> Scalar:
    """``<f, g>_h``; linear in ``f``, conjugate-linear in ``g``."""
    if f.dim != g.dim:
        raise ValueError(f"dimension mismatch: {f.dim} vs {g.dim}")
    h = _metric(h)
    gt = g.terms
    total = ZERO
    for m, c in f.items():
        d = gt.get(m)
        if d is None:
            continue
        term = c * d.conjugate()
        w = h.weight(m, f.dim)
        total = total + (term if w == 1 else term * w)
    return total


def norm2(f: Form, h: Optional[MetricSpec] = None) -> Fraction:
    """Squared length ``<f, f>_h`` as an exact (real) rational."""
    v = inner(h, f, f)
    assert v.is_real()
    return v.re


class Polyvector:
    """Holomorphic multivector ``sum c_I Z_{i_1} ^ ... ^ Z_{i_p}``.

    Contraction follows ``i(Z_{i_1} ^ ... ^ Z_{i_p}) = i(Z_{i_p}) ... i(Z_{i_1})``.
    """

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[int, Scalar]):
        self.dim = dim
        self.terms = {m: c for m, c in terms.items() if c}

    def contract(self, f: Form) -> Form:
        if f.dim != self.dim:
            raise ValueError("dimension mismatch")
        out: Dict[int, Scalar] = {}
        for pm, pc in self.terms.items():
            bits = [b for b in range(self.dim) if (pm >> b) & 1]
            for m, c in f.items():
                sign, cur = 1, m
                for b in bits:  # lowest index acts first
                    s, cur = contract_bit(cur, b)
                    if s == 0:
                        break
                    sign *= s
                else:
                    val = c * pc if sign > 0 else -(c * pc)
                    out[cur] = out[cur] + val if cur in out else val
        return Form(self.dim, out)

    def __eq__(self, other):
        return isinstance(other, Polyvector) and self.dim == other.dim and self.terms == other.terms

    def __repr__(self):
        return f"Polyvector({self.dim}, {self.terms})"


def sharp(f: Form) -> Polyvector:
    """Metric dual of a holomorphic form under the standard metric.

    The map is conjugate-linear, as required for ``eps(w)^* = i(w#)``.
    """
    g = f.grades()
    if len(g) > 1 or any(q for _, q in g):
        raise ValueError(f"sharp needs a pure (p,0) form, got types {sorted(g)}")
    return Polyvector(f.dim, {m: c.conjugate() for m, c in f.items()})


def sharp_holomorphic(f: Form) -> Polyvector:
    """Like :func:`sharp` but accepts a sum of holomorphic degrees."""
    if any(q for _, q in f.grades()):
        raise ValueError("form has anti-holomorphic components")
    return Polyvector(f.dim, {m: c.conjugate() for m, c in f.items()})


def flat(v: FrameVector) -> Form:
    """``Z^flat``: ``Z_j -> dz_j`` and ``Zbar_j -> dzbar_j``, conjugate-linearly."""
    return Form(v.dim, {1 << b: c.conjugate() for b, c in v.items()})


def flat_inverse(f: Form) -> FrameVector:
    """Inverse of :func:`flat` on 1-forms."""
    if any(m.bit_count() != 1 for m in f):
        raise ValueError("flat_inverse needs a 1-form")
    return FrameVector(f.dim, {m.bit_length() - 1: c.conjugate() for m, c in f.items()})


def _reweight(result: Dict[int, Scalar], w_in: Fraction, h: MetricSpec, n: int) -> Dict[int, Scalar]:
    # h-adjoint = W^{-1} (standard adjoint) W for a diagonal weight matrix W
    if h.is_standard:
        return result
    return {m: c * (w_in / h.weight(m, n)) for m, c in result.items()}


def adjoint_wedge(w: Form, f: Form, h: Optional[MetricSpec] = None) -> Form:
    """``eps(w)^{*h} f``; for the standard metric this is ``i(w#) f``."""
    if w.dim != f.dim:
        raise ValueError("dimension mismatch")
    h = _metric(h)
    pv = sharp_holomorphic(w)
    out: Dict[int, Scalar] = {}
    for m, c in f.items():
        part = pv.contract(Form(f.dim, {m: c})).terms
        for k, v in _reweight(part, h.weight(m, f.dim), h, f.dim).items():
            out[k] = out[k] + v if k in out else v
    return Form(f.dim, out)


def adjoint_interior(v: FrameVector, f: Form, h: Optional[MetricSpec] = None) -> Form:
    """``i(v)^{*h} f``; for the standard metric this is ``v^flat ^ f``."""
    if v.dim != f.dim:
        raise ValueError("dimension mismatch")
    h = _metric(h)
    vf = flat(v)
    out: Dict[int, Scalar] = {}
    for m, c in f.items():
        part = (vf ^ Form(f.dim, {m: c})).terms
        for k, val in _reweight(part, h.weight(m, f.dim), h, f.dim).items():
            out[k] = out[k] + val if k in out else val
    return Form(f.dim, out)


def volume_form(n: int) -> Form:
    """``omega^n / n!`` for ``omega = i sum dz_j ^ dzbar_j``.

    Equal to ``i^n (-1)^(n(n-1)/2) dz_1^...^dz_n^dzbar_1^...^dzbar_n``: a real
    form of unit length under the standard metric.
    """
    top = (1 << (2 * n)) - 1
    c = I ** n
    if (n * (n - 1) // 2) & 1:
        c = -c
    return Form(n, {top: c})


def _star_word(m: int, n: int) -> Tuple[int, Scalar]:
    # u = sigma * conj(beta) with beta a basis word; *u = sigma * c * gamma where
    # gamma is the complement of beta and beta ^ (c gamma) = vol.
    low = (1 << n) - 1
    h, a = m & low, m >> n
    sigma = -1 if (h.bit_count() * a.bit_count()) & 1 else 1
    beta = a | (h << n)
    gamma = ((1 << (2 * n)) - 1) & ~beta
    tau = word_sign(beta, gamma)
    vol_c = volume_form(n).coeff((1 << (2 * n)) - 1)
    c = vol_c if tau * sigma > 0 else -vol_c
    return gamma, c


def hodge_star(f: Form) -> Form:
    """Complex-linear Hodge star fixed by ``a ^ *conj(b) = <a, b> vol``.

    Maps ``Lambda^(p,q)`` to ``Lambda^(n-q,n-p)``.
    """
    n = f.dim
    out: Dict[int, Scalar] = {}
    for m, c in f.items():
        g, s = _star_word(m, n)
        out[g] = out.get(g, ZERO) + c * s
    return Form(n, out)


def star_square_sign(n: int, w: int) -> int:
    """Scalar by which ``**`` acts on forms of total degree ``w``, read off a basis word."""
    if not 0 <= w <= 2 * n:
        raise ValueError("degree out of range")
    m = (1 << w) - 1
    f = Form(n, {m: ONE})
    ss = hodge_star(hodge_star(f))
    c = ss.coeff(m)
    assert len(ss) == 1 and c in (ONE, -ONE)
    return 1 if c == ONE else -1
