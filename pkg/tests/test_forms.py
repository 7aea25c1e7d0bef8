from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rathom.sullivan.forms import (
    PolynomialForm,
    degeneracy_pullback,
    face_pullback,
    form_keys,
    nabla,
)

P = PolynomialForm.parse


def forms(n, max_D=3):
    keys = [k for m in range(n + 1) for D in range(max_D + 1) for k in form_keys(n, m, D)]
    return st.dictionaries(
        st.sampled_from(sorted(set(keys))),
        st.fractions(min_value=-3, max_value=3, max_denominator=2),
        max_size=4,
    ).map(lambda d: PolynomialForm(n, d))


def homogeneous(n, m, max_D=3):
    keys = sorted({k for D in range(max_D + 1) for k in form_keys(n, m, D)})
    return st.dictionaries(st.sampled_from(keys), st.integers(-3, 3), max_size=3).map(
        lambda d: PolynomialForm(n, d)) if keys else st.just(PolynomialForm.zero(n))


def test_nabla_zero_is_constants():
    assert form_keys(0, 0, 5) == (((), ()),)
    assert form_keys(0, 1, 5) == ()
    assert nabla(0).cohomology_dims(4) == [1]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_poincare_lemma(n):
    assert nabla(n).cohomology_dims(6 if n == 1 else 4) == [1] + [0] * n


def test_differential_examples():
    assert P("t1^2", 1).d() == P("2*t1*dt1", 1)
    assert P("t0", 2).d() == P("-dt1 - dt2", 2)
    assert P("dt0", 2) == P("-dt1 - dt2", 2)
    assert (P("dt1", 2) * P("dt1", 2)).is_zero()
    assert P("dt1", 2) * P("dt2", 2) == -(P("dt2", 2) * P("dt1", 2))


def test_face_and_degeneracy_examples():
    t1 = PolynomialForm.t(1, 1)
    assert face_pullback(t1, 1).is_zero()
    assert face_pullback(t1, 0) == PolynomialForm.constant(0)
    assert degeneracy_pullback(t1, 1) == P("t1 + t2", 2)
    assert degeneracy_pullback(t1, 0) == P("t2", 2)
    with pytest.raises(ValueError):
        face_pullback(t1, 2)


def test_degrees():
    f = P("t1^2*dt2 + 3*dt1", 2)
    assert f.degree() == 1 and f.filtration_degree() == 3
    with pytest.raises(ValueError):
        P("t1 + dt1", 1).degree()


def test_format_round_trip():
    f = P("1/2*t1^2*dt2 - t0*dt1*dt2 + 4", 2)
    assert P(f.format(), 2) == f


@pytest.mark.parametrize("n", [2, 3])
@given(data=st.data())
def test_face_identities(n, data):
    w = data.draw(forms(n))
    for j in range(n + 1):
        for i in range(j):
            assert face_pullback(face_pullback(w, j), i) == face_pullback(face_pullback(w, i), j - 1)


@pytest.mark.parametrize("n", [0, 1, 2])
@given(data=st.data())
def test_degeneracy_identities(n, data):
    w = data.draw(forms(n))
    for j in range(n + 1):
        for i in range(j + 1):
            assert degeneracy_pullback(degeneracy_pullback(w, j), i) == \
                degeneracy_pullback(degeneracy_pullback(w, i), j + 1)


@pytest.mark.parametrize("n", [1, 2, 3])
@given(data=st.data())
def test_mixed_identities(n, data):
    w = data.draw(forms(n))
    for j in range(n + 1):
        sw = degeneracy_pullback(w, j)  # a form on the (n+1)-simplex
        for i in range(n + 2):
            lhs = face_pullback(sw, i)
            if i < j:
                assert lhs == degeneracy_pullback(face_pullback(w, i), j - 1)
            elif i in (j, j + 1):
                assert lhs == w
            else:
                assert lhs == degeneracy_pullback(face_pullback(w, i - 1), j)


@pytest.mark.parametrize("n", [1, 2, 3])
@given(data=st.data())
def test_pullbacks_commute_with_d_and_products(n, data):
    a, b = data.draw(forms(n)), data.draw(forms(n))
    for j in range(n + 1):
        assert face_pullback(a.d(), j) == face_pullback(a, j).d()
        assert degeneracy_pullback(a.d(), j) == degeneracy_pullback(a, j).d()
        assert face_pullback(a * b, j) == face_pullback(a, j) * face_pullback(b, j)
        assert degeneracy_pullback(a * b, j) == degeneracy_pullback(a, j) * degeneracy_pullback(b, j)


@pytest.mark.parametrize("n", [1, 2, 3])
@given(data=st.data())
def test_filtration_is_respected(n, data):
    a = data.draw(forms(n))
    D = a.filtration_degree()
    assert a.d().filtration_degree() <= D
    for j in range(n + 1):
        assert face_pullback(a, j).filtration_degree() <= D
        assert degeneracy_pullback(a, j).filtration_degree() <= D


@given(homogeneous(2, 1), homogeneous(2, 1))
def test_graded_commutativity(a, b):
    assert a * b == -(b * a)
    assert (a * b).d() == a.d() * b - a * b.d()


def test_scalar_and_constant():
    f = P("t1", 1)
    assert f * Fraction(2) == P("2*t1", 1) == 2 * f
    assert PolynomialForm.constant(1, 3) == P("3", 1)
