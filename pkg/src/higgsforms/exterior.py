"""Sparse exact exterior algebra of a complex n-dimensional model space.

Basis words are stored as a single bitmask over ``2n`` slots: bit ``j-1`` is
``dz_j`` and bit ``n+j-1`` is ``dzbar_j``.  Ascending bit order is the
canonical blade order (holomorphic indices ascending, then anti-holomorphic
ascending), so every sign in the package comes from one reordering rule.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Tuple

from .scalar import ONE, ZERO, Scalar, ScalarLike, as_scalar

__all__ = [
    "MAX_DIM",
    "BasisWord",
    "Form",
    "FrameVector",
    "wedge",
    "interior",
    "project",
    "grades",
    "euler_degree",
    "word_sign",
    "contract_bit",
]

MAX_DIM = 12


class BasisWord(NamedTuple):
    """``dz_holo ^ dzbar_anti`` with both index sets given as bitmasks over 1..n."""

    holo: int
    anti: int

    @property
    def hodge_type(self) -> Tuple[int, int]:
        return self.holo.bit_count(), self.anti.bit_count()

    def holo_indices(self) -> Tuple[int, ...]:
        return _bits1(self.holo)

    def anti_indices(self) -> Tuple[int, ...]:
        return _bits1(self.anti)


def _bits1(mask: int) -> Tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


# -- word-level kernels ------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def word_sign(a: int, b: int) -> int:
    """Sign of ``blade(a) ^ blade(b)`` relative to ``blade(a|b)``; 0 on overlap."""
    if a & b:
        return 0
    swaps = 0
    m = b
    while m:
        low = m & -m
        swaps += (a & ~((low << 1) - 1)).bit_count()
        m ^= low
    return -1 if swaps & 1 else 1


def contract_bit(mask: int, bit: int) -> Tuple[int, int]:
    """Interior product of the slot ``bit`` into ``blade(mask)``.

    Returns ``(sign, new_mask)`` with ``sign == 0`` when the slot is absent.
    """
    if not (mask >> bit) & 1:
        return 0, mask
    below = (mask & ((1 << bit) - 1)).bit_count()
    return (-1 if below & 1 else 1), mask & ~(1 << bit)


def _check_dim(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_DIM:
        raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {n!r}")


class Form:
    """Element of the complexified exterior algebra with exact coefficients.

    ``terms`` maps combined word masks to nonzero :class:`Scalar` values; zero
    coefficients are never stored, so two forms are equal exactly when their
    term maps are.  Instances are treated as immutable.
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Optional[Mapping[int, ScalarLike]] = None):
        _check_dim(dim)
        self.dim = dim
        clean: Dict[int, Scalar] = {}
        if terms:
            limit = 1 << (2 * dim)
            for m, c in terms.items():
                if not 0 <= m < limit:
                    raise ValueError(f"word mask {m:#x} does not fit dimension {dim}")
                c = as_scalar(c)
                if c:
                    clean[m] = c
        self._terms = clean

    @classmethod
    def _raw(cls, dim: int, terms: Dict[int, Scalar]) -> "Form":
        f = object.__new__(cls)
        f.dim = dim
        f._terms = {m: c for m, c in terms.items() if c}
        return f

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "Form":
        return cls(n)

    @classmethod
    def one(cls, n: int, coeff: ScalarLike = 1) -> "Form":
        return cls(n, {0: coeff})

    @classmethod
    def word(cls, n: int, holo: Iterable[int] = (), anti: Iterable[int] = (),
             coeff: ScalarLike = 1) -> "Form":
        """``coeff * dz_{holo[0]} ^ ... ^ dzbar_{anti[0]} ^ ...`` in the order given.

        Indices are 1-based; repeated indices give zero and an unsorted order
        picks up the permutation sign.
        """
        _check_dim(n)
        out = cls.one(n, coeff)
        for j in holo:
            out = out ^ cls._slot(n, j - 1)
        for j in anti:
            out = out ^ cls._slot(n, n + j - 1)
        return out

    @classmethod
    def dz(cls, n: int, *indices: int) -> "Form":
        return cls.word(n, holo=indices)

    @classmethod
    def dzbar(cls, n: int, *indices: int) -> "Form":
        return cls.word(n, anti=indices)

    @classmethod
    def from_words(cls, n: int, terms: Mapping[BasisWord, ScalarLike]) -> "Form":
        return cls(n, {w.holo | (w.anti << n): c for w, c in terms.items()})

    @classmethod
    def _slot(cls, n: int, bit: int) -> "Form":
        if not 0 <= bit < 2 * n:
            raise ValueError(f"index out of range for dimension {n}")
        return cls._raw(n, {1 << bit: ONE})

    # -- inspection ----------------------------------------------------------
    @property
    def terms(self) -> Mapping[int, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(self._terms.items())

    def coeff(self, mask: int) -> Scalar:
        return self._terms.get(mask, ZERO)

    def words(self) -> Iterator[Tuple[BasisWord, Scalar]]:
        n = self.dim
        low = (1 << n) - 1
        for m, c in self._terms.items():
            yield BasisWord(m & low, m >> n), c

    def split_mask(self, mask: int) -> Tuple[int, int]:
        return mask & ((1 << self.dim) - 1), mask >> self.dim

    def hodge_type_of(self, mask: int) -> Tuple[int, int]:
        h, a = self.split_mask(mask)
        return h.bit_count(), a.bit_count()

    def grades(self) -> set:
        return {self.hodge_type_of(m) for m in self._terms}

    def is_pure(self) -> bool:
        return len(self.grades()) <= 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    # -- algebra ---------------------------------------------------------
    def _same_dim(self, other: "Form") -> None:
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        self._same_dim(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out[m] + c if m in out else c
        return Form._raw(self.dim, out)

    def __neg__(self) -> "Form":
        return Form._raw(self.dim, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def scale(self, s: ScalarLike) -> "Form":
        s = as_scalar(s)
        if not s:
            return Form(self.dim)
        return Form._raw(self.dim, {m: c * s for m, c in self._terms.items()})

    def __mul__(self, s):
        if isinstance(s, Form):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def __xor__(self, other: "Form") -> "Form":
        return wedge(self, other)

    def conj(self) -> "Form":
        """Complex conjugate: swaps ``dz`` and ``dzbar`` and conjugates coefficients."""
        n = self.dim
        low = (1 << n) - 1
        out: Dict[int, Scalar] = {}
        for m, c in self._terms.items():
            h, a = m & low, m >> n
            # conj(dz_H ^ dzbar_A) = dzbar_H ^ dz_A = sign * dz_A ^ dzbar_H
            sgn = -1 if (h.bit_count() * a.bit_count()) & 1 else 1
            key = a | (h << n)
            val = c.conjugate() if sgn > 0 else -c.conjugate()
            out[key] = out[key] + val if key in out else val
        return Form._raw(n, out)

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Scalar)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"Form({self.dim}, 0)"
        return f"Form({self.dim}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        n = self.dim
        parts = []
        for m in sorted(self._terms):
            c = self._terms[m]
            h, a = m & ((1 << n) - 1), m >> n
            factors = [f"dz{j}" for j in _bits1(h)] + [f"dzb{j}" for j in _bits1(a)]
            word = "^".join(factors) if factors else "1"
            parts.append(f"({c})*{word}")
        return " + ".join(parts)


def wedge(f: Form, g: Form) -> Form:
    """Exterior product; signs from sorting the concatenated index word."""
    f._same_dim(g)
    out: Dict[int, Scalar] = {}
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            if a & b:
                continue
            s = word_sign(a, b)
            val = ca * cb if s > 0 else -(ca * cb)
            key = a | b
            out[key] = out[key] + val if key in out else val
    return Form._raw(f.dim, out)


class FrameVector:
    """Scalar-linear combination of the frame vectors ``Z_j`` and ``Zbar_j``.

    Pairing conventions: ``dz_i(Z_j) = dzbar_i(Zbar_j) = delta_ij`` and the
    mixed pairings vanish.  Coefficients are stored per slot bit, matching the
    :class:`Form` word layout.
    """

    __slots__ = ("dim", "_coeffs")

    def __init__(self, dim: int, coeffs: Optional[Mapping[int, ScalarLike]] = None):
        _check_dim(dim)
        self.dim = dim
        clean = {}
        for bit, c in (coeffs or {}).items():
            if not 0 <= bit < 2 * dim:
                raise ValueError(f"slot {bit} out of range for dimension {dim}")
            c = as_scalar(c)
            if c:
                clean[bit] = c
        self._coeffs = clean

    @classmethod
    def Z(cls, n: int, j: int, coeff: ScalarLike = 1) -> "FrameVector":
        if not 1 <= j <= n:
            raise ValueError(f"frame index {j} out of range 1..{n}")
        return cls(n, {j - 1: coeff})

    @classmethod
    def Zbar(cls, n: int, j: int, coeff: ScalarLike = 1) -> "FrameVector":
        if not 1 <= j <= n:
            raise ValueError(f"frame index {j} out of range 1..{n}")
        return cls(n, {n + j - 1: coeff})

    @classmethod
    def holomorphic(cls, coeffs: Sequence[ScalarLike]) -> "FrameVector":
        return cls(len(coeffs), {j: c for j, c in enumerate(coeffs)})

    def items(self):
        return self._coeffs.items()

    @property
    def is_holomorphic(self) -> bool:
        return all(b < self.dim for b in self._coeffs)

    @property
    def is_antiholomorphic(self) -> bool:
        return all(b >= self.dim for b in self._coeffs)

    def bar(self) -> "FrameVector":
        """Complex conjugate vector: ``sum c_j Z_j  ->  sum conj(c_j) Zbar_j``."""
        n = self.dim
        return FrameVector(n, {(b + n) % (2 * n): c.conjugate() for b, c in self._coeffs.items()})

    def __add__(self, other: "FrameVector") -> "FrameVector":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        out = dict(self._coeffs)
        for b, c in other._coeffs.items():
            out[b] = out.get(b, ZERO) + c
        return FrameVector(self.dim, out)

    def __mul__(self, s):
        s = as_scalar(s)
        return FrameVector(self.dim, {b: c * s for b, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FrameVector):
            return NotImplemented
        return self.dim == other.dim and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.dim, frozenset(self._coeffs.items())))

    def __repr__(self):
        n = self.dim
        parts = [f"({c})*{'Z' if b < n else 'Zb'}{b % n + 1}" for b, c in sorted(self._coeffs.items())]
        return f"FrameVector({n}, {' + '.join(parts) or '0'})"


def interior(v: FrameVector, f: Form) -> Form:
    """Interior product ``i(v) f``, a degree-lowering anti-derivation."""
    if v.dim != f.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {f.dim}")
    out: Dict[int, Scalar] = {}
    for bit, cv in v._coeffs.items():
        for m, c in f._terms.items():
            s, m2 = contract_bit(m, bit)
            if s == 0:
                continue
            val = c * cv if s > 0 else -(c * cv)
            out[m2] = out[m2] + val if m2 in out else val
    return Form._raw(f.dim, out)


def project(f: Form, p: int, q: int) -> Form:
    """Component of ``f`` of Hodge type ``(p, q)``."""
    return Form._raw(f.dim, {m: c for m, c in f._terms.items() if f.hodge_type_of(m) == (p, q)})


def grades(f: Form) -> set:
    return f.grades()


def euler_degree(f: Form) -> Form:
    """``sum_j dz_j ^ i(Z_j) f`` for a pure ``(k, 0)`` form, which equals ``k f``."""
    g = f.grades()
    if len(g) > 1 or any(q != 0 for _, q in g):
        raise ValueError(f"euler_degree needs a pure (k,0) form, got types {sorted(g)}")
    n = f.dim
    out = Form(n)
    for j in range(1, n + 1):
        out = out + (Form.dz(n, j) ^ interior(FrameVector.Z(n, j), f))
    return out
