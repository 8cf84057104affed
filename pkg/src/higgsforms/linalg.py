"""Exact sparse linear algebra over Gaussian rationals."""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = ["SparseMatrix", "dense_inverse", "nullspace"]

Row = Dict[int, Scalar]


class SparseMatrix:
    """Square matrix stored as ``{row: {col: value}}`` with no explicit zeros."""

    __slots__ = ("size", "rows")

    def __init__(self, size: int, rows: Optional[Mapping[int, Mapping[int, Scalar]]] = None):
        self.size = size
        clean: Dict[int, Row] = {}
        for i, row in (rows or {}).items():
            r = {j: v for j, v in row.items() if v}
            if r:
                clean[i] = r
        self.rows = clean

    @classmethod
    def identity(cls, size: int, scale: Scalar = ONE) -> "SparseMatrix":
        return cls(size, {i: {i: scale} for i in range(size)}) if scale else cls(size)

    @classmethod
    def from_columns(cls, size: int, columns: Iterable[Tuple[int, Mapping[int, Scalar]]]) -> "SparseMatrix":
        """Build from ``(col, {row: value})`` pairs; repeated entries accumulate."""
        rows: Dict[int, Row] = {}
        for j, col in columns:
            for i, v in col.items():
                r = rows.setdefault(i, {})
                r[j] = r[j] + v if j in r else v
        return cls(size, rows)

    def _check(self, other: "SparseMatrix") -> None:
        if other.size != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                tgt[j] = tgt[j] + v if j in tgt else v
        return SparseMatrix(self.size, rows)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.size, {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, s) -> "SparseMatrix":
        s = as_scalar(s)
        if not s:
            return SparseMatrix(self.size)
        return SparseMatrix(self.size, {i: {j: v * s for j, v in r.items()} for i, r in self.rows.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check(other)
        orows = other.rows
        out: Dict[int, Row] = {}
        for i, r in self.rows.items():
            acc: Row = {}
            for k, a in r.items():
                ok = orows.get(k)
                if not ok:
                    continue
                for j, b in ok.items():
                    p = a * b
                    acc[j] = acc[j] + p if j in acc else p
            out[i] = acc
        return SparseMatrix(self.size, out)

    def adjoint(self) -> "SparseMatrix":
        """Conjugate transpose."""
        out: Dict[int, Row] = {}
        for i, r in self.rows.items():
            for j, v in r.items():
                out.setdefault(j, {})[i] = v.conjugate()
        return SparseMatrix(self.size, out)

    H = property(adjoint)

    def apply(self, vec: Mapping[int, Scalar]) -> Dict[int, Scalar]:
        out: Row = {}
        for i, r in self.rows.items():
            acc = ZERO
            for j, v in r.items():
                x = vec.get(j)
                if x is not None:
                    acc = acc + v * x
            if acc:
                out[i] = acc
        return out

    def entries(self) -> Iterable[Tuple[int, int, Scalar]]:
        for i, r in self.rows.items():
            for j, v in r.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.size == other.size and self.rows == other.rows

    __hash__ = None

    def first_difference(self, other: "SparseMatrix") -> Optional[Tuple[int, int, Scalar, Scalar]]:
        """First ``(row, col, self_value, other_value)`` where the matrices differ."""
        for i in sorted(set(self.rows) | set(other.rows)):
            a, b = self.rows.get(i, {}), other.rows.get(i, {})
            for j in sorted(set(a) | set(b)):
                va, vb = a.get(j, ZERO), b.get(j, ZERO)
                if va != vb:
                    return i, j, va, vb
        return None

    def submatrix(self, idx: Sequence[int]) -> List[List[Scalar]]:
        pos = {g: k for k, g in enumerate(idx)}
        out = [[ZERO] * len(idx) for _ in idx]
        for g in idx:
            for j, v in self.rows.get(g, {}).items():
                if j in pos:
                    out[pos[g]][pos[j]] = v
        return out

    def __repr__(self):
        return f"SparseMatrix(size={self.size}, nnz={self.nnz()})"


def dense_inverse(m: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    """Gauss-Jordan inverse; raises ``ZeroDivisionError`` when singular."""
    n = len(m)
    a = [[as_scalar(x) for x in row] + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        inv = a[c][c].inverse()
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def nullspace(m: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    """Basis of ``{x : m x = 0}`` by exact row reduction."""
    rows = [[as_scalar(x) for x in r] for r in m]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis
