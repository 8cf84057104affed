"""Single-character model of ``E (x) Lambda^(p,q)`` over a flat torus.

A section ``s = chi(z) (e_b (x) phi)`` with unitary character
``chi = exp(sum a_j z_j - conj(a_j) zbar_j)`` turns every first-order
operator into a finite matrix: ``d/dz_j`` multiplies by ``a_j`` and
``d/dzbar_j`` by ``-conj(a_j)``.  Since ``|chi| = 1`` the formal adjoints in
one frequency sector are conjugate transposes, so Kahler-type identities
become exact matrix equalities.

Basis index: ``bundle_mask << 2n | form_mask`` where ``bundle_mask`` picks a
word of ``E = sum_a Lambda^(a,0)`` and ``form_mask`` a word of the form factor
(holomorphic bits first).  Without a Higgs field the bundle is the trivial
line bundle and only ``bundle_mask = 0`` occurs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .curvature import (PointFrameData, assemble_F, higgs_frame_data, holomorphic_basis)
from .exterior import BasisWord, Form, contract_bit, word_sign
from .higgs import HiggsField, theta as theta_form
from .linalg import SparseMatrix, nullspace
from .scalar import I, ONE, ZERO, Scalar, as_scalar

__all__ = [
    "TensorWord",
    "CharacterSection",
    "OperatorMatrix",
    "IdentityResult",
    "AuditEntry",
    "OP_NAMES",
    "LAPLACIANS",
    "TorusModel",
    "build_op",
    "adjoint_of",
    "adjoint_via_commutator",
    "laplacian",
    "nakano_check",
    "higgs_nakano_check",
    "kahler_adjoint_check",
    "lefschetz_check",
    "kernel_inclusion_check",
    "type_shift_audit",
    "gigante_girbau",
    "gigante_girbau_operator",
    "kodnak_scalar",
]

Shift = Tuple[Optional[int], Optional[int], Optional[int]]

OP_NAMES = ("dbar", "dh", "theta", "theta_adj", "L", "Lambda")
LAPLACIANS = ("box_dbar", "box_dh", "box_D2", "box_D1", "box_D", "boxbar", "box")


class TensorWord(NamedTuple):
    """``e_bundle (x) dz_holo ^ dzbar_anti``."""

    bundle: int
    form: BasisWord

    @property
    def grading(self) -> Tuple[int, int, int]:
        return (self.bundle.bit_count(),) + self.form.hodge_type

    def index(self, n: int) -> int:
        return (self.bundle << (2 * n)) | self.form.holo | (self.form.anti << n)

    @classmethod
    def from_index(cls, idx: int, n: int) -> "TensorWord":
        low = (1 << n) - 1
        return cls(idx >> (2 * n), BasisWord(idx & low, (idx >> n) & low))


def _grading(idx: int, n: int) -> Tuple[int, int, int]:
    low = (1 << n) - 1
    return (idx >> (2 * n)).bit_count(), (idx & low).bit_count(), ((idx >> n) & low).bit_count()


def _freq(freq: Sequence) -> Tuple[Scalar, ...]:
    return tuple(as_scalar(a) for a in freq)


@dataclass
class CharacterSection:
    """``chi_a(z)`` times a constant element of ``E (x) Lambda``."""

    freq: Tuple[Scalar, ...]
    coeff: Dict[TensorWord, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        self.freq = _freq(self.freq)
        self.coeff = {w: as_scalar(c) for w, c in self.coeff.items() if as_scalar(c)}

    @property
    def dim(self) -> int:
        return len(self.freq)

    def vector(self) -> Dict[int, Scalar]:
        n = self.dim
        return {w.index(n): c for w, c in self.coeff.items()}

    @classmethod
    def from_vector(cls, freq, vec: Mapping[int, Scalar]) -> "CharacterSection":
        n = len(freq)
        return cls(freq, {TensorWord.from_index(i, n): c for i, c in vec.items()})

    def gradings(self) -> set:
        return {w.grading for w in self.coeff}


@dataclass
class OperatorMatrix:
    """A matrix on the tensor basis with its declared ``(a; p, q)`` shift.

    A ``None`` component of ``shift`` is not checked.
    """

    n: int
    matrix: SparseMatrix
    shift: Optional[Shift] = None
    name: str = ""

    def violations(self) -> Iterable[Tuple[int, int, Scalar]]:
        if self.shift is None:
            return
        n = self.n
        for i, j, v in self.matrix.entries():
            gi, gj = _grading(i, n), _grading(j, n)
            for s, a, b in zip(self.shift, gi, gj):
                if s is not None and a != b + s:
                    yield i, j, v
                    break

    def respects_shift(self) -> bool:
        return next(iter(self.violations()), None) is None

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return OperatorMatrix(self.n, self.matrix @ other.matrix, _add_shift(self.shift, other.shift))

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        sh = self.shift if self.shift == other.shift else None
        return OperatorMatrix(self.n, self.matrix + other.matrix, sh)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        sh = self.shift if self.shift == other.shift else None
        return OperatorMatrix(self.n, self.matrix - other.matrix, sh)

    def scale(self, s) -> "OperatorMatrix":
        return OperatorMatrix(self.n, self.matrix.scale(s), self.shift)

    def with_shift(self, shift: Optional[Shift], name: str = "") -> "OperatorMatrix":
        return OperatorMatrix(self.n, self.matrix, shift, name or self.name)

    def apply(self, s: CharacterSection) -> CharacterSection:
        return CharacterSection.from_vector(s.freq, self.matrix.apply(s.vector()))

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None


def _add_shift(a: Optional[Shift], b: Optional[Shift]) -> Optional[Shift]:
    if a is None or b is None:
        return None
    return tuple(None if x is None or y is None else x + y for x, y in zip(a, b))


def _neg_shift(a: Optional[Shift]) -> Optional[Shift]:
    return None if a is None else tuple(None if x is None else -x for x in a)


@dataclass(frozen=True)
class IdentityResult:
    """Outcome of an exact matrix identity; truthy iff it holds."""

    name: str
    ok: bool
    witness: Optional[dict] = None

    def __bool__(self):
        return self.ok


def _compare(name: str, n: int, lhs: SparseMatrix, rhs: SparseMatrix, freq=None) -> IdentityResult:
    d = lhs.first_difference(rhs)
    if d is None:
        return IdentityResult(name, True)
    i, j, a, b = d
    w = {"row": TensorWord.from_index(i, n), "col": TensorWord.from_index(j, n),
         "lhs": a, "rhs": b}
    if freq is not None:
        w["freq"] = tuple(freq)
    return IdentityResult(name, False, w)


class TorusModel:
    """All operators of one frequency sector, built once and cached."""

    def __init__(self, freq: Sequence, H: Optional[HiggsField] = None):
        self.freq = _freq(freq)
        n = self.n = len(self.freq)
        if n < 1:
            raise ValueError("frequency vector must be nonempty")
        if H is not None and H.dim != n:
            raise ValueError("Higgs field dimension does not match the frequency")
        self.H = H
        self.k = H.k if H is not None else None
        self.bundle_masks = list(range(1 << n)) if H is not None else [0]
        self.size = len(self.bundle_masks) << 2 * n
        self._cache: Dict[str, OperatorMatrix] = {}

    # -- elementary pieces ---------------------------------------------------

    def _form_op(self, terms: Sequence[Tuple[Scalar, str, int]],
                 bundle: Optional[Mapping[int, Mapping[int, Scalar]]] = None) -> SparseMatrix:
        """Sum of ``coeff * B (x) x`` with ``x`` an elementary form operator.

        ``terms`` holds ``(coeff, kind, bit)``; ``kind`` is ``"eps"`` (wedge
        with the slot ``bit``) or ``"int"`` (contract it).  ``bundle`` is the
        bundle factor ``B`` as ``{col: {row: value}}`` (identity if None).
        """
        n = self.n
        nf = 1 << 2 * n
        rows: Dict[int, Dict[int, Scalar]] = {}
        for b in self.bundle_masks:
            bcol = {b: ONE} if bundle is None else bundle.get(b, {})
            if not bcol:
                continue
            for f in range(nf):
                col = (b << 2 * n) | f
                for c, kind, bit in terms:
                    if not c:
                        continue
                    if kind == "eps":
                        if (f >> bit) & 1:
                            continue
                        sign, g = word_sign(1 << bit, f), f | (1 << bit)
                    else:
                        sign, g = contract_bit(f, bit)
                        if sign == 0:
                            continue
                    for b2, bv in bcol.items():
                        v = c * bv
                        if sign < 0:
                            v = -v
                        r = rows.setdefault((b2 << 2 * n) | g, {})
                        r[col] = r[col] + v if col in r else v
        return SparseMatrix(self.size, rows)

    def _bundle_A(self, j: int) -> Dict[int, Dict[int, Scalar]]:
        """``e_b -> (i(Z_j) omega) ^ e_b`` on the bundle factor."""
        n = self.n
        out = {}
        for b in self.bundle_masks:
            img = theta_form(self.H, j, Form(n, {b: ONE}))
            if img:
                out[b] = dict(img.items())
        return out

    @staticmethod
    def _bundle_adjoint(A: Mapping[int, Mapping[int, Scalar]]) -> Dict[int, Dict[int, Scalar]]:
        out: Dict[int, Dict[int, Scalar]] = {}
        for b, col in A.items():
            for b2, v in col.items():
                out.setdefault(b2, {})[b] = v.conjugate()
        return out

    def _zero(self) -> SparseMatrix:
        return SparseMatrix(self.size)

    # -- named operators -----------------------------------------------------

    def op(self, name: str) -> OperatorMatrix:
        if name in self._cache:
            return self._cache[name]
        n, k = self.n, self.k
        h = 0 if k is None else k - 1
        if name == "dbar":
            m = self._form_op([(-a.conjugate(), "eps", n + j) for j, a in enumerate(self.freq)])
            res = OperatorMatrix(n, m, (0, 0, 1))
        elif name == "dh":
            m = self._form_op([(a, "eps", j) for j, a in enumerate(self.freq)])
            res = OperatorMatrix(n, m, (0, 1, 0))
        elif name in ("theta", "theta_adj"):
            m = self._zero()
            if self.H is not None:
                for j in range(1, n + 1):
                    A = self._bundle_A(j)
                    if name == "theta":
                        m = m + self._form_op([(ONE, "eps", j - 1)], A)
                    else:
                        m = m + self._form_op([(ONE, "eps", n + j - 1)], self._bundle_adjoint(A))
            res = OperatorMatrix(n, m, (h, 1, 0) if name == "theta" else (-h, 0, 1))
        elif name == "L":
            # omega = i sum dz_j ^ dzbar_j
            m = self._zero()
            for j in range(n):
                e1 = self._form_op([(ONE, "eps", j)])
                e2 = self._form_op([(I, "eps", n + j)])
                m = m + e1 @ e2
            res = OperatorMatrix(n, m, (0, 1, 1))
        elif name == "Lambda":
            res = OperatorMatrix(n, self.op("L").matrix.adjoint(), (0, -1, -1))
        elif name == "Lambda_contraction":
            # i sum i(Z_j) i(Zbar_j), the contraction form of the dual operator
            m = self._zero()
            for j in range(n):
                m = m + self._form_op([(I, "int", j)]) @ self._form_op([(ONE, "int", n + j)])
            res = OperatorMatrix(n, m, (0, -1, -1))
        elif name == "D2":
            res = (self.op("dbar").with_shift(None) + self.op("theta").with_shift(None))
        elif name == "D1":
            res = (self.op("dh").with_shift(None) + self.op("theta_adj").with_shift(None))
        else:
            raise ValueError(f"unknown operator {name!r}; expected one of {OP_NAMES}")
        res.name = name
        self._cache[name] = res
        return res

    def adj(self, name: str) -> OperatorMatrix:
        key = name + "*"
        if key not in self._cache:
            o = self.op(name)
            self._cache[key] = OperatorMatrix(self.n, o.matrix.adjoint(), _neg_shift(o.shift), key)
        return self._cache[key]

    def commutator(self, A: OperatorMatrix, B: OperatorMatrix, anti: bool = False) -> OperatorMatrix:
        ab, ba = A @ B, B @ A
        return ab + ba if anti else ab - ba

    def lambda_bracket(self, name: str) -> OperatorMatrix:
        """``[Lambda, X]`` for a named operator ``X``."""
        return self.commutator(self.op("Lambda"), self.op(name))

    def laplacian(self, which: str) -> OperatorMatrix:
        if which in self._cache:
            return self._cache[which]
        pairs = {"box_dbar": ["dbar"], "box_dh": ["dh"], "box_D2": ["D2"], "box_D1": ["D1"],
                 "boxbar": ["dbar", "theta"], "box": ["dh", "theta_adj"]}
        if which == "box_D":
            D = self.op("D1") + self.op("D2")
            Ds = OperatorMatrix(self.n, D.matrix.adjoint())
            res = D @ Ds + Ds @ D
        elif which in pairs:
            res = None
            for nm in pairs[which]:
                t = self.op(nm) @ self.adj(nm) + self.adj(nm) @ self.op(nm)
                res = t if res is None else res + t
        else:
            raise ValueError(f"unknown Laplacian {which!r}; expected one of {LAPLACIANS}")
        res = res.with_shift((0, 0, 0), which)
        self._cache[which] = res
        return res

    def e_operator(self, mat: Sequence[Sequence[Form]], basis: Sequence[int]) -> SparseMatrix:
        """``e(F)(e_a (x) phi) = sum_b e_b (x) F[b][a] ^ phi``."""
        n = self.n
        nf = 1 << 2 * n
        rows: Dict[int, Dict[int, Scalar]] = {}
        r = len(basis)
        for a in range(r):
            for b in range(r):
                F = mat[b][a]
                if not F:
                    continue
                for f in range(nf):
                    col = (basis[a] << 2 * n) | f
                    for w, c in F.items():
                        if w & f:
                            continue
                        s = word_sign(w, f)
                        row = (basis[b] << 2 * n) | (w | f)
                        v = c if s > 0 else -c
                        rr = rows.setdefault(row, {})
                        rr[col] = rr[col] + v if col in rr else v
        return SparseMatrix(self.size, rows)

    def curvature_commutator(self, mat, basis) -> SparseMatrix:
        """``i (Lambda e(F) - e(F) Lambda)``."""
        e = self.e_operator(mat, basis)
        Lam = self.op("Lambda").matrix
        return (Lam @ e - e @ Lam).scale(I)


def build_op(name: str, freq: Sequence, H: Optional[HiggsField] = None) -> OperatorMatrix:
    """One of ``dbar, dh, theta, theta_adj, L, Lambda`` in the sector ``freq``."""
    if name not in OP_NAMES:
        raise ValueError(f"unknown operator {name!r}; expected one of {OP_NAMES}")
    return TorusModel(freq, H).op(name)


def adjoint_of(op: OperatorMatrix) -> OperatorMatrix:
    """Conjugate transpose; the formal adjoint because the character is unitary."""
    return OperatorMatrix(op.n, op.matrix.adjoint(), _neg_shift(op.shift),
                          op.name + "*" if op.name else "")


# adjoint = c [Lambda, partner]
_KAHLER = {
    "dh": (I, "dbar"),
    "dbar": (-I, "dh"),
    "theta": (-I, "theta_adj"),
    "theta_adj": (I, "theta"),
    "D1": (I, "D2"),
    "D2": (-I, "D1"),
}


def adjoint_via_commutator(model: TorusModel, name: str) -> OperatorMatrix:
    """The adjoint of ``name`` written as ``+-i [Lambda, partner]``.

    ``L`` and ``Lambda`` are each other's adjoints.
    """
    if name == "L":
        return model.op("Lambda")
    if name == "Lambda":
        return model.op("L")
    if name not in _KAHLER:
        raise ValueError(f"no commutator formula for {name!r}")
    c, partner = _KAHLER[name]
    return model.lambda_bracket(partner).scale(c)


def kahler_adjoint_check(model: TorusModel, name: str) -> IdentityResult:
    lhs = model.adj(name).matrix
    rhs = adjoint_via_commutator(model, name).matrix
    return _compare(f"adjoint[{name}]", model.n, lhs, rhs, model.freq)


def laplacian(which: str, freq: Sequence, H: Optional[HiggsField] = None) -> OperatorMatrix:
    return TorusModel(freq, H).laplacian(which)


def nakano_check(freq: Sequence) -> IdentityResult:
    """Flat Nakano identity on forms: ``box_dh - box_dbar = i(Lambda e(Theta) - e(Theta) Lambda)``
    with ``Theta = 0``, so both sides are built and compared."""
    model = TorusModel(freq)
    lhs = model.laplacian("box_dh").matrix - model.laplacian("box_dbar").matrix
    zero = [[Form(model.n)]]
    rhs = model.curvature_commutator(zero, [0])
    return _compare("nakano", model.n, lhs, rhs, model.freq)


def _higgs_curvature(model: TorusModel):
    data = higgs_frame_data(model.H)
    return assemble_F(data), holomorphic_basis(model.n)


def higgs_nakano_check(freq: Sequence, H: HiggsField, model: Optional[TorusModel] = None) -> IdentityResult:
    """``box_D1 - box_D2 = i(Lambda e(F) - e(F) Lambda)`` with ``F`` assembled from frame data."""
    model = model or TorusModel(freq, H)
    F, basis = _higgs_curvature(model)
    lhs = model.laplacian("box_D1").matrix - model.laplacian("box_D2").matrix
    rhs = model.curvature_commutator(F.F11, basis)
    if any(f for row in F.F20 for f in row) or any(f for row in F.F02 for f in row):
        rhs = rhs + model.curvature_commutator(F.F20, basis) + model.curvature_commutator(F.F02, basis)
    return _compare("higgs_nakano", model.n, lhs, rhs, model.freq)


def lefschetz_check(n: int) -> IdentityResult:
    """``[Lambda, L] = (n - p - q) Id`` on the form space."""
    model = TorusModel([ZERO] * n)
    lhs = model.commutator(model.op("Lambda"), model.op("L")).matrix
    rhs = SparseMatrix(model.size, {f: {f: Scalar(n - (f & ((1 << n) - 1)).bit_count()
                                                    - (f >> n).bit_count())}
                                    for f in range(model.size)})
    return _compare("lefschetz", n, lhs, rhs)


def _blocks(model: TorusModel) -> Dict[Tuple[int, int, int], List[int]]:
    out: Dict[Tuple[int, int, int], List[int]] = {}
    for b in model.bundle_masks:
        for f in range(1 << 2 * model.n):
            idx = (b << 2 * model.n) | f
            out.setdefault(_grading(idx, model.n), []).append(idx)
    return out


def kernel_inclusion_check(model: TorusModel, small: str = "boxbar", big: str = "box_D2") -> IdentityResult:
    """Every exact kernel vector of ``small`` (blockwise) is killed by ``big``."""
    S, B = model.laplacian(small).matrix, model.laplacian(big).matrix
    for g, idx in sorted(_blocks(model).items()):
        for v in nullspace(S.submatrix(idx)):
            vec = {idx[t]: c for t, c in enumerate(v) if c}
            out = B.apply(vec)
            if out:
                return IdentityResult(f"ker {small} in ker {big}", False,
                                      {"block": g, "freq": model.freq, "vector": vec})
    return IdentityResult(f"ker {small} in ker {big}", True)


@dataclass(frozen=True)
class AuditEntry:
    name: str
    shift: Shift
    ok: bool
    nnz: int
    witness: Optional[dict] = None


def _synthetic_F20(model: TorusModel) -> Tuple[List[List[Form]], List[List[Form]], List[int]]:
    # generic (2,0) curvature datum; F02 is its h-adjoint image via assemble_F
    n = model.n
    basis = holomorphic_basis(n) if model.H is not None else [0]
    r = len(basis)
    dt = [[Form(n) for _ in range(r)] for _ in range(r)]
    for a in range(r):
        for b in range(r):
            c = Scalar(1 + (a + 2 * b) % 3, (a * b) % 2)
            dt[b][a] = Form.dz(n, 1, 2).scale(c)
    theta0 = [[Form(n) for _ in range(r)] for _ in range(r)]
    gram = [[ONE if i == j else ZERO for j in range(r)] for i in range(r)]
    F = assemble_F(PointFrameData(n, gram, theta0, d_theta=dt))
    return F.F20, F.F02, basis


def type_shift_audit(H: Optional[HiggsField], freq: Optional[Sequence] = None) -> List[AuditEntry]:
    """Check that every nonzero entry of each operator lands in its declared grading."""
    n = H.dim if H is not None else len(freq)
    if freq is None:
        freq = [Scalar(j + 1, 1 - j) for j in range(n)]
    model = TorusModel(freq, H)
    h = 0 if model.k is None else model.k - 1
    ops: List[Tuple[str, OperatorMatrix, Shift]] = []
    for nm in OP_NAMES:
        ops.append((nm, model.op(nm), model.op(nm).shift))
    ops.append(("theta*", model.adj("theta"), (-h, -1, 0)))
    ops.append(("theta_adj*", model.adj("theta_adj"), (h, 0, -1)))
    ops.append(("dbar*", model.adj("dbar"), (0, 0, -1)))
    ops.append(("dh*", model.adj("dh"), (0, -1, 0)))
    com = model.commutator
    ops.append(("{dbar, theta*}", com(model.op("dbar"), model.adj("theta"), True), (-h, -1, 1)))
    ops.append(("{dh*, theta_adj}", com(model.adj("dh"), model.op("theta_adj"), True), (-h, -1, 1)))
    ops.append(("{dbar*, theta}", com(model.adj("dbar"), model.op("theta"), True), (h, 1, -1)))
    ops.append(("{dh, theta_adj*}", com(model.op("dh"), model.adj("theta_adj"), True), (h, 1, -1)))
    for lap in LAPLACIANS:
        ops.append((lap, model.laplacian(lap), (0, 0, 0)))
    if H is not None:
        F, basis = _higgs_curvature(model)
        ops.append(("i[Lambda, e(F11)]",
                    OperatorMatrix(n, model.curvature_commutator(F.F11, basis)), (0, 0, 0)))
    if n >= 2:
        F20, F02, basis = _synthetic_F20(model)
        ops.append(("i[Lambda, e(F20)]",
                    OperatorMatrix(n, model.curvature_commutator(F20, basis)), (None, 1, -1)))
        ops.append(("i[Lambda, e(F02)]",
                    OperatorMatrix(n, model.curvature_commutator(F02, basis)), (None, -1, 1)))
    report = []
    for nm, o, sh in ops:
        chk = o.with_shift(sh, nm)
        bad = next(iter(chk.violations()), None)
        wit = None
        if bad is not None:
            i, j, v = bad
            wit = {"row": TensorWord.from_index(i, n), "col": TensorWord.from_index(j, n), "value": v}
        report.append(AuditEntry(nm, sh, bad is None, o.matrix.nnz(), wit))
    return report


def gigante_girbau(kappa: Sequence, s: CharacterSection) -> Scalar:
    """``sum |phi_IJ|^2 (-sum_{I & J} kappa_i + sum_{(I | J)^c} kappa_i)``."""
    n = s.dim
    kap = [Fraction(x) for x in kappa]
    if len(kap) != n:
        raise ValueError(f"kappa needs {n} entries, got {len(kap)}")
    total = Fraction(0)
    for w, c in s.coeff.items():
        I_, J_ = w.form.holo, w.form.anti
        both, neither = I_ & J_, ~(I_ | J_) & ((1 << n) - 1)
        val = -sum(kap[i] for i in range(n) if (both >> i) & 1) + \
            sum(kap[i] for i in range(n) if (neither >> i) & 1)
        total += c.abs2() * val
    return Scalar(total)


def gigante_girbau_operator(kappa: Sequence, s: CharacterSection,
                            model: Optional[TorusModel] = None) -> Scalar:
    """``<i(Lambda e(K) - e(K) Lambda) s, s>`` with ``K = (sum kappa_i dz_i ^ dzbar_i) Id``."""
    n = s.dim
    kap = [Fraction(x) for x in kappa]
    if len(kap) != n:
        raise ValueError(f"kappa needs {n} entries, got {len(kap)}")
    bundles = {w.bundle for w in s.coeff}
    if model is None:
        # any Higgs field gives the full bundle basis; the curvature here is kappa alone
        model = TorusModel(s.freq, HiggsField(Form.dz(n, 1)) if bundles - {0} else None)
    K = Form(n)
    for i, x in enumerate(kap):
        K = K + (Form.dz(n, i + 1) ^ Form.dzbar(n, i + 1)).scale(x)
    basis = model.bundle_masks
    mat = [[K if a == b else Form(n) for a in range(len(basis))] for b in range(len(basis))]
    op = model.curvature_commutator(mat, basis)
    vec = s.vector()
    out = op.apply(vec)
    return sum((c * vec[i].conjugate() for i, c in out.items() if i in vec), ZERO)


def kodnak_scalar(n: int, r: int, p: int, q: int) -> Fraction:
    """``-(n - p - q) / r``: the Lefschetz eigenvalue scaled by ``-1/r``."""
    if r < 1:
        raise ValueError("rank must be positive")
    return Fraction(-(n - p - q), r)
