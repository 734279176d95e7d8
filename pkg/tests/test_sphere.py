from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from s3quotient.binform import BinaryForm, S, T, transvectant
from s3quotient.cyclo import CycloNum
from s3quotient.invariants import icosahedral_vertex_form, tetrahedral_vertex_form
from s3quotient.sphere import (
    GENERATORS,
    Multiplet,
    SphereFunction,
    apply_generator,
    cg_highest,
    hermitian_contraction,
    in_span,
    linear_relations,
    multiplet_from_hw,
)

from conftest import cyclo_nums

exps = st.tuples(*(st.integers(0, 3) for _ in range(4)))


@st.composite
def sphere_functions(draw):
    terms = draw(st.dictionaries(exps, cyclo_nums(max_terms=2), max_size=5))
    return SphereFunction(terms)


def bracket(a, b, f):
    return apply_generator(a, apply_generator(b, f)) - apply_generator(b, apply_generator(a, f))


def test_sphere_relation_reduces_to_one():
    s, t, sb, tb = (SphereFunction.var(v) for v in ("s", "t", "sb", "tb"))
    assert s * sb + t * tb == SphereFunction.constant(1)


def test_canonical_form_has_no_t_tbar():
    f = SphereFunction({(0, 3, 0, 2): 1, (1, 1, 1, 1): 2})
    assert all(not (b and d) for (_, b, _, d) in f.terms)


def test_unknown_generator():
    with pytest.raises(ValueError):
        apply_generator("Jx", SphereFunction.constant(1))


@settings(max_examples=100, deadline=None)
@given(sphere_functions())
def test_commutation_relations(f):
    for side in ("L", "R"):
        z, p, m = f"Jz{side}", f"J+{side}", f"J-{side}"
        assert bracket(z, p, f) == apply_generator(p, f)
        assert bracket(z, m, f) == -apply_generator(m, f)
        assert bracket(p, m, f) == apply_generator(z, f).scale(2)
    for a in ("JzL", "J+L", "J-L"):
        for b in ("JzR", "J+R", "J-R"):
            assert bracket(a, b, f).is_zero()


@settings(max_examples=50, deadline=None)
@given(sphere_functions(), sphere_functions())
def test_generators_are_derivations(f, g):
    for name in GENERATORS:
        lhs = apply_generator(name, f * g)
        rhs = apply_generator(name, f) * g + f * apply_generator(name, g)
        assert lhs == rhs


@settings(max_examples=50, deadline=None)
@given(sphere_functions())
def test_conj_is_involution(f):
    assert f.conj().conj() == f


def test_json_roundtrip():
    f = SphereFunction({(1, 0, 2, 1): CycloNum.from_powers({7: 1})})
    assert SphereFunction.from_json(f.to_json()) == f


def test_multiplet_lowering_identity():
    V = tetrahedral_vertex_form()
    M = multiplet_from_hw(V)
    g = M.component(0)
    for l in range(5):
        assert g == M.component(l).scale(Fraction(factorial(4), factorial(4 - l)))
        g = apply_generator("J-R", g)
    assert g.is_zero()
    assert apply_generator("J+R", M.component(0)).is_zero()


def test_multiplet_length_check():
    with pytest.raises(ValueError):
        Multiplet(2, [SphereFunction.constant(1)])


def test_cg_highest_equals_transvectant():
    f, g = S ** 2, T ** 2
    M1, M2 = multiplet_from_hw(f), multiplet_from_hw(g)
    assert cg_highest(M1, M2, 2) == SphereFunction.from_form(transvectant(f, g, 2))
    assert transvectant(f, g, 2) == BinaryForm.constant(1)
    with pytest.raises(ValueError):
        cg_highest(M1, M2, 3)


def test_hermitian_contraction_icosahedral():
    M = multiplet_from_hw(icosahedral_vertex_form())
    assert hermitian_contraction(M) == SphereFunction.constant(Fraction(25, 84))


def test_span_helpers():
    s, t = SphereFunction.var("s"), SphereFunction.var("t")
    assert in_span(s + t, [s, t])
    assert not in_span(s * t, [s, t])
    rel = linear_relations([s, t, s + t])
    assert len(rel) == 1
