import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from higgsforms.checks import rand_freq
from higgsforms.exterior import BasisWord, Form
from higgsforms.higgs import HiggsField
from higgsforms.linalg import SparseMatrix
from higgsforms.scalar import ONE, ZERO, Scalar
from higgsforms.torus import (LAPLACIANS, CharacterSection, TensorWord, TorusModel, adjoint_of,
                              build_op, gigante_girbau, gigante_girbau_operator,
                              higgs_nakano_check, kahler_adjoint_check, kernel_inclusion_check,
                              kodnak_scalar, laplacian, lefschetz_check, nakano_check,
                              type_shift_audit)

import oracle

CONFIGS = [(2, 1), (3, 1), (3, 3)]


def field(n, k):
    return HiggsField(Form.dz(n, *range(1, k + 1)))


def to_scalar(v):
    v = sp.nsimplify(v)
    return Scalar(sp.re(v), sp.im(v))


def dense_from_oracle(basis, M, size):
    rows = {}
    for i, wi in enumerate(basis):
        for j, wj in enumerate(basis):
            if M[i, j] != 0:
                rows.setdefault(sum(1 << s for s in wi), {})[sum(1 << s for s in wj)] = to_scalar(M[i, j])
    return SparseMatrix(size, rows)


# -- tensor words --------------------------------------------------------------

def test_tensor_word_roundtrip_and_grading():
    n = 3
    w = TensorWord(0b011, BasisWord(0b100, 0b101))
    assert w.grading == (2, 1, 2)
    assert TensorWord.from_index(w.index(n), n) == w


def test_character_section_vector_roundtrip():
    s = CharacterSection([1, Scalar(0, 1)], {TensorWord(0, BasisWord(1, 2)): Scalar(2, 1)})
    assert CharacterSection.from_vector(s.freq, s.vector()) == s
    assert s.gradings() == {(0, 1, 1)}


# -- operators against the oracle ----------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_dbar_matches_oracle(n):
    rng = random.Random(n)
    freq = rand_freq(rng, n)
    sym = [sp.Rational(a.re.numerator, a.re.denominator) + sp.I * sp.Rational(a.im.numerator, a.im.denominator)
           for a in freq]
    basis, M = oracle.dbar_matrix(sym, n)
    op = build_op("dbar", freq)
    assert op.matrix == dense_from_oracle(basis, M, op.matrix.size)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lefschetz_pair_matches_oracle(n):
    basis, L, Lam = oracle.lefschetz_matrices(n)
    model = TorusModel([0] * n)
    assert model.op("L").matrix == dense_from_oracle(basis, L, model.size)
    assert model.op("Lambda").matrix == dense_from_oracle(basis, Lam, model.size)
    assert model.op("Lambda_contraction") == model.op("Lambda")


def test_zero_frequency_kills_derivatives():
    for name in ("dbar", "dh"):
        assert build_op(name, [0, 0, 0]).matrix.is_zero()
    for which in ("box_dbar", "box_dh", "box_D2", "box_D1", "box_D"):
        assert laplacian(which, [0, 0]).matrix.is_zero()


def test_theta_on_the_unit_bundle_word():
    n = 3
    model = TorusModel([0] * n, HiggsField.top(n))
    s = CharacterSection(model.freq, {TensorWord(0, BasisWord(0, 0)): ONE})
    out = model.op("theta").apply(s)
    # (i(Z_j) omega) (x) dz_j: the 2-blade missing j, signed, tensored with dz_j
    expected = {TensorWord(0b110, BasisWord(0b001, 0)): ONE,
                TensorWord(0b101, BasisWord(0b010, 0)): -ONE,
                TensorWord(0b011, BasisWord(0b100, 0)): ONE}
    assert out.coeff == expected


def test_unknown_names_rejected():
    with pytest.raises(ValueError):
        build_op("nabla", [1])
    with pytest.raises(ValueError):
        TorusModel([1]).laplacian("box_nabla")
    with pytest.raises(ValueError):
        TorusModel([1, 2], HiggsField.top(3))


def test_adjoint_of_L_is_Lambda():
    model = TorusModel([1, 2])
    assert adjoint_of(model.op("L")) == model.op("Lambda")
    assert adjoint_of(adjoint_of(model.op("dbar"))) == model.op("dbar")


# -- Kaehler adjoints ----------------------------------------------------------

@pytest.mark.parametrize("n,k", CONFIGS)
def test_kahler_adjoint_identities(n, k):
    rng = random.Random(f"kahler{n}{k}")
    for _ in range(5):
        model = TorusModel(rand_freq(rng, n), field(n, k))
        for name in ("dh", "dbar", "theta", "theta_adj", "D1", "D2"):
            assert kahler_adjoint_check(model, name), name


def test_kahler_check_detects_a_sign_error():
    n = 2
    model = TorusModel([Scalar(1, 2), Scalar(-1, 1)], field(n, 1))
    lhs = model.adj("theta").matrix
    wrong = model.lambda_bracket("theta_adj").scale(Scalar(0, 1)).matrix
    assert lhs != wrong


# -- Laplacians ----------------------------------------------------------------

@given(st.integers(0, 10 ** 6))
@settings(max_examples=10)
def test_laplacians_self_adjoint_and_nonnegative(seed):
    rng = random.Random(seed)
    n, k = rng.choice(CONFIGS)
    model = TorusModel(rand_freq(rng, n), field(n, k))
    vec = {rng.randrange(model.size): Scalar(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(6)}
    for which in LAPLACIANS:
        M = model.laplacian(which).matrix
        assert M.adjoint() == M
        out = M.apply(vec)
        q = sum((c * vec[i].conjugate() for i, c in out.items() if i in vec), ZERO)
        assert q.im == 0 and q.re >= 0


@pytest.mark.parametrize("n,k", CONFIGS)
def test_square_zero_and_laplacian_splitting(n, k):
    model = TorusModel([Scalar(2, -1), Scalar(Fraction(1, 2), 3), Scalar(-1)][:n], field(n, k))
    for name in ("D1", "D2", "dbar", "dh"):
        assert (model.op(name) @ model.op(name)).matrix.is_zero()
        assert (model.adj(name) @ model.adj(name)).matrix.is_zero()
    assert model.laplacian("box_D") == model.laplacian("box_D1") + model.laplacian("box_D2")
    assert model.laplacian("box_D2") == model.laplacian("boxbar")
    assert model.laplacian("box_D1") == model.laplacian("box")


@pytest.mark.parametrize("n,k", CONFIGS)
def test_kernel_inclusion(n, k):
    model = TorusModel([Scalar(1, 1)] + [ZERO] * (n - 1), field(n, k))
    assert kernel_inclusion_check(model)
    assert kernel_inclusion_check(model, "box", "box_D1")


# -- Nakano identities ---------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_flat_nakano(n):
    rng = random.Random(f"nakano{n}")
    for _ in range(3):
        assert nakano_check(rand_freq(rng, n))


@pytest.mark.parametrize("n,k", CONFIGS)
def test_higgs_nakano(n, k):
    rng = random.Random(f"higgs-nakano{n}{k}")
    H = HiggsField(Form.dz(n, *range(1, k + 1)).scale(Scalar(1, -2)))
    for _ in range(3):
        assert higgs_nakano_check(rand_freq(rng, n), H)


def test_higgs_nakano_fails_without_curvature_term():
    n = 3
    model = TorusModel([Scalar(1), Scalar(0, 1), Scalar(2, 1)], field(n, 3))
    lhs = model.laplacian("box_D1").matrix - model.laplacian("box_D2").matrix
    assert not lhs.is_zero()


def test_lefschetz_commutator():
    for n in range(1, 6):
        res = lefschetz_check(n)
        assert res and res.witness is None


# -- type shifts ---------------------------------------------------------------

@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (3, 1), (3, 3)])
def test_type_shift_audit(n, k):
    report = type_shift_audit(field(n, k))
    assert all(e.ok for e in report), [e for e in report if not e.ok]
    names = {e.name for e in report}
    assert {"theta", "theta_adj", "i[Lambda, e(F11)]"} <= names
    if n >= 2:
        assert {"i[Lambda, e(F20)]", "i[Lambda, e(F02)]"} <= names
        assert next(e for e in report if e.name == "i[Lambda, e(F20)]").nnz > 0


def test_declared_theta_shift():
    model = TorusModel([1, 2, 3], field(3, 3))
    assert model.op("theta").shift == (2, 1, 0)
    assert model.op("theta_adj").shift == (-2, 0, 1)
    assert model.op("theta").respects_shift()
    assert not model.op("theta").with_shift((0, 1, 0)).respects_shift()


def test_forms_only_audit():
    assert all(e.ok for e in type_shift_audit(None, [Scalar(1, 1), Scalar(2)]))


# -- curvature quadratic forms -------------------------------------------------

def section(n, bundle, holo, anti, c=ONE, freq=None):
    return CharacterSection(freq or [0] * n, {TensorWord(bundle, BasisWord(holo, anti)): c})


def test_gigante_girbau_examples():
    n = 2
    s = section(n, 0, 0b01, 0b01)
    assert gigante_girbau([1, 1], s) == 0
    assert gigante_girbau_operator([1, 1], s) == 0
    kappa = [Fraction(3), Fraction(-1, 2)]
    assert gigante_girbau(kappa, section(n, 0, 0, 0)) == Scalar(Fraction(5, 2))
    assert gigante_girbau(kappa, section(n, 0, 0b11, 0b11)) == Scalar(Fraction(-5, 2))
    with pytest.raises(ValueError):
        gigante_girbau([1], s)


def test_gigante_girbau_bundle_valued_even_dimension():
    s = section(2, 0b11, 0b01, 0b10, Scalar(1, 1))
    kappa = [2, Fraction(1, 3)]
    assert gigante_girbau_operator(kappa, s) == gigante_girbau(kappa, s) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gigante_girbau_exhaustive(n):
    rng = random.Random(f"gg{n}")
    kappa = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
    model = TorusModel([0] * n)
    for f in range(1 << 2 * n):
        s = section(n, 0, f & ((1 << n) - 1), f >> n, Scalar(rng.randint(1, 3), rng.randint(-2, 2)))
        assert gigante_girbau(kappa, s) == gigante_girbau_operator(kappa, s, model)


def test_kodnak_scalar():
    assert kodnak_scalar(3, 2, 1, 1) == Fraction(-1, 2)
    assert kodnak_scalar(2, 1, 0, 0) == -2
    assert kodnak_scalar(4, 3, 2, 2) == 0
    with pytest.raises(ValueError):
        kodnak_scalar(3, 0, 0, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_kodnak_sign_pattern(n):
    for p in range(n + 1):
        for q in range(n + 1):
            for r in (1, 2, 7):
                v = kodnak_scalar(n, r, p, q)
                assert (v < 0) == (p + q <= n - 1)
                assert (v == 0) == (p + q == n)
