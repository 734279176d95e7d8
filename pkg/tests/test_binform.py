from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from s3quotient.binform import (
    BinaryForm,
    DegreeError,
    S,
    T,
    act,
    cross,
    hessian,
    raw_transvectant,
    transvectant,
    transvectant_prefactor,
)
from s3quotient.cyclo import CycloNum
from s3quotient.groups import build, TETRAHEDRAL

from conftest import binary_forms, cyclo_nums


def test_hessian_examples():
    assert hessian(S * T) == BinaryForm.constant(Fraction(-1, 2))
    P = S ** 2 * T ** 2
    assert hessian(P) == P.scale(Fraction(-1, 6))


def test_transvectant_order_zero_is_product():
    f, g = S ** 3 + T ** 3, S * T
    assert transvectant(f, g, 0) == f * g


def test_transvectant_degree_errors():
    with pytest.raises(DegreeError):
        transvectant(S, S ** 3, 2)
    with pytest.raises(DegreeError):
        hessian(S)
    with pytest.raises(DegreeError):
        cross(BinaryForm.constant(1), S)


def test_prefactor_and_raw():
    f, g = S ** 4 + T ** 4, S ** 2 * T
    k = 2
    assert transvectant_prefactor(4, 3, 2) == Fraction(2 * 1, 24 * 6)
    assert transvectant(f, g, k) == raw_transvectant(f, g, k).scale(transvectant_prefactor(4, 3, 2))


def test_substitute_and_derivatives():
    f = S ** 2 + (S * T).scale(3)
    assert f.diff_s() == S.scale(2) + T.scale(3)
    assert f.diff_t() == S.scale(3)
    # s -> t, t -> s swaps coefficients
    assert f.substitute(0, 1, 1, 0) == T ** 2 + (S * T).scale(3)


def test_json_roundtrip():
    f = S ** 3 - (T ** 3).scale(CycloNum.from_powers({30: 1}))
    assert BinaryForm.from_json(f.to_json()) == f


@settings(max_examples=40, deadline=None)
@given(binary_forms(), binary_forms(), st.data())
def test_transvectant_symmetry(f, g, data):
    k = data.draw(st.integers(0, min(f.degree, g.degree)))
    assert transvectant(f, g, k) == transvectant(g, f, k).scale((-1) ** k)


@settings(max_examples=40, deadline=None)
@given(binary_forms(min_degree=2, max_degree=5), cyclo_nums(), st.data())
def test_transvectant_bilinear(f, c, data):
    g = data.draw(binary_forms(min_degree=f.degree, max_degree=f.degree))
    h = data.draw(binary_forms(min_degree=2, max_degree=5))
    k = data.draw(st.integers(0, min(f.degree, h.degree)))
    assert transvectant(f + g.scale(c), h, k) == transvectant(f, h, k) + transvectant(g, h, k).scale(c)


@pytest.fixture(scope="module")
def tet():
    return build(TETRAHEDRAL)


@settings(max_examples=25, deadline=None)
@given(binary_forms(min_degree=2, max_degree=5), binary_forms(min_degree=2, max_degree=5),
       st.integers(0, 23), st.integers(0, 23), st.data())
def test_act_is_left_action_and_equivariant(tet, f, g, i, j, data):
    a, b = tet.elements[i], tet.elements[j]
    assert act(a * b, f) == act(a, act(b, f))
    k = data.draw(st.integers(0, min(f.degree, g.degree)))
    assert act(a, transvectant(f, g, k)) == transvectant(act(a, f), act(a, g), k)
