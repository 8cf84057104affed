from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from higgsforms.exterior import (BasisWord, Form, FrameVector, euler_degree, grades, interior,
                                 project, wedge)
from higgsforms.scalar import I, ONE, ZERO, Scalar

import oracle
from strategies import forms, frame_vectors, pure_forms, scalars


# -- scalars -------------------------------------------------------------------

def test_scalar_normalises_and_compares():
    assert Scalar(Fraction(2, 4), Fraction(-6, 4)) == Scalar("1/2", "-3/2")
    assert Scalar(3) == 3 and Scalar(0) == 0
    assert hash(Scalar(2)) == hash(Scalar(Fraction(4, 2)))
    assert I * I == -1


def test_scalar_rejects_floats():
    with pytest.raises(TypeError):
        Scalar(0.5)


def test_scalar_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)


@given(scalars, scalars, scalars)
def test_scalar_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a
    assert a.conjugate().conjugate() == a
    n = a * a.conjugate()
    assert n.im == 0 and n.re >= 0 and n.re == a.abs2()


def test_scalar_json_is_exact():
    assert Scalar("1/3", -2).to_json() == {"re": "1/3", "im": "-2"}


# -- wedge ---------------------------------------------------------------------

def test_wedge_examples():
    n = 3
    assert (Form.dz(n, 1) ^ Form.dz(n, 2)) == Form.dz(n, 1, 2)
    assert not (Form.dz(n, 1) ^ Form.dz(n, 1))
    assert (Form.dz(n, 2, 3) ^ Form.dz(n, 1)) == Form.dz(n, 1, 2, 3)
    assert Form.dz(n, 2, 1) == -Form.dz(n, 1, 2)


def test_wedge_dimension_mismatch():
    with pytest.raises(ValueError):
        wedge(Form.dz(2, 1), Form.dz(3, 1))


def test_word_mask_must_fit():
    with pytest.raises(ValueError):
        Form(1, {1 << 2: 1})


def test_holomorphic_factors_precede_antiholomorphic():
    n = 2
    w = Form.dzbar(n, 1) ^ Form.dz(n, 2)
    assert w == -Form.word(n, [2], [1])
    assert w.hodge_type_of(next(iter(w))) == (1, 1)


@given(st.data())
def test_wedge_matches_inversion_count_oracle(data):
    n = data.draw(st.integers(1, 3))
    a, b = data.draw(forms(n)), data.draw(forms(n))
    got = a ^ b
    ref = oracle.wedge(_to_oracle(a), _to_oracle(b))
    assert _to_oracle(got) == ref


def _to_oracle(f):
    import sympy as sp
    out = {}
    for m, c in f.items():
        slots = tuple(b for b in range(2 * f.dim) if (m >> b) & 1)
        out[slots] = sp.Rational(c.re.numerator, c.re.denominator) + \
            sp.I * sp.Rational(c.im.numerator, c.im.denominator)
    return out


@given(st.data())
def test_wedge_associative_and_bilinear(data):
    n = data.draw(st.integers(1, 4))
    a, b, c = (data.draw(forms(n)) for _ in range(3))
    s = data.draw(scalars)
    assert (a ^ b) ^ c == a ^ (b ^ c)
    assert (a + c) ^ b == (a ^ b) + (c ^ b)
    assert (a.scale(s)) ^ b == (a ^ b).scale(s)


@given(st.data())
def test_graded_commutativity(data):
    n = data.draw(st.integers(1, 4))
    (a, da), (b, db) = data.draw(pure_forms(n)), data.draw(pure_forms(n))
    assert (a ^ b) == (b ^ a).scale((-1) ** (da * db))


# -- interior ------------------------------------------------------------------

def test_interior_examples():
    n = 3
    assert interior(FrameVector.Z(n, 1), Form.dz(n, 1, 2, 3)) == Form.dz(n, 2, 3)
    assert interior(FrameVector.Z(n, 2), Form.dz(n, 1, 2)) == -Form.dz(n, 1)
    assert not interior(FrameVector.Z(n, 1), Form.dzbar(n, 1))
    assert interior(FrameVector.Zbar(n, 1), Form.dzbar(n, 1)) == Form.one(n)


def test_dual_pairing():
    n = 3
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = ONE if i == j else ZERO
            assert interior(FrameVector.Z(n, j), Form.dz(n, i)).coeff(0) == d
            assert interior(FrameVector.Zbar(n, j), Form.dzbar(n, i)).coeff(0) == d
            assert not interior(FrameVector.Zbar(n, j), Form.dz(n, i))


@given(st.data())
def test_interior_is_antiderivation(data):
    n = data.draw(st.integers(1, 4))
    (a, da) = data.draw(pure_forms(n))
    b = data.draw(forms(n))
    v = data.draw(frame_vectors(n))
    lhs = interior(v, a ^ b)
    rhs = (interior(v, a) ^ b) + (a ^ interior(v, b)).scale((-1) ** da)
    assert lhs == rhs


@given(st.data())
def test_interior_squares_to_zero(data):
    n = data.draw(st.integers(1, 4))
    f = data.draw(forms(n))
    v = data.draw(frame_vectors(n))
    assert not interior(v, interior(v, f))


# -- grading -------------------------------------------------------------------

def test_projection_examples():
    n = 2
    f = Form.dz(n, 1) + Form.dzbar(n, 1)
    assert project(f, 1, 0) == Form.dz(n, 1)
    assert not project(Form.dz(n, 1), 0, 1)
    g = Form.word(n, [1], [2]) + Form.dz(n, 1, 2)
    assert grades(g) == {(1, 1), (2, 0)}


@given(st.data())
def test_projections_reconstruct_and_are_idempotent(data):
    n = data.draw(st.integers(1, 4))
    f = data.draw(forms(n))
    parts = [project(f, p, q) for p in range(n + 1) for q in range(n + 1)]
    assert sum(parts, Form(n)) == f
    for p in range(n + 1):
        assert project(project(f, p, 0), p, 0) == project(f, p, 0)


def test_basis_word_type():
    assert BasisWord(0b101, 0b010).hodge_type == (2, 1)
    assert BasisWord(0b101, 0).holo_indices() == (1, 3)


# -- contraction identity ------------------------------------------------------

def test_euler_degree_examples():
    n = 3
    w = Form.dz(n, 1, 2, 3)
    assert euler_degree(w) == w.scale(3)
    assert not euler_degree(Form.one(n))


def test_euler_degree_random_two_form_matches_termwise_oracle():
    n = 4
    f = Form(n, {0b0011: Scalar(2, 1), 0b0110: Scalar("-1/3"), 0b1001: Scalar(0, 5)})
    # term-by-term: each word dz_a ^ dz_b gets dz_a ^ i(Z_a) + dz_b ^ i(Z_b) = 2 x itself
    expected = Form(n, {m: c * 2 for m, c in f.items()})
    assert euler_degree(f) == expected


@given(st.data())
def test_euler_degree_multiplies_by_degree(data):
    n = data.draw(st.integers(1, 6))
    k = data.draw(st.integers(0, n))
    f = data.draw(forms(n, k, 0))
    assert euler_degree(f) == f.scale(k)


def test_euler_degree_rejects_mixed_type():
    with pytest.raises(ValueError):
        euler_degree(Form.dz(2, 1) + Form.dzbar(2, 1))


# -- conjugation ---------------------------------------------------------------

@given(st.data())
def test_conjugation_is_antilinear_algebra_involution(data):
    n = data.draw(st.integers(1, 3))
    a, b = data.draw(forms(n)), data.draw(forms(n))
    s = data.draw(scalars)
    assert a.conj().conj() == a
    assert (a ^ b).conj() == a.conj() ^ b.conj()
    assert a.scale(s).conj() == a.conj().scale(s.conjugate())


def test_conjugate_swaps_types():
    n = 2
    assert Form.dz(n, 1).conj() == Form.dzbar(n, 1)
    assert Form.word(n, [1], [2]).scale(I).conj() == -(Form.word(n, [2], [1]).scale(-I))
