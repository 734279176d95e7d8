from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from s3quotient.cyclo import (
    DIM,
    I,
    ONE,
    PHI,
    SQRT2,
    SQRT3,
    SQRT5,
    ZERO,
    CycloMatrix,
    CycloNum,
    approx,
    from_root_counts,
    nullspace,
    rank,
    root_index,
    root_of_unity,
    zeta,
)

from conftest import cyclo_nums


def test_phi_matches_sympy():
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(120, x), x).all_coeffs()[::-1]
    assert PHI == [int(c) for c in expected]
    assert DIM == 32


def test_zeta_has_order_120():
    z = zeta(1)
    assert z ** 120 == ONE
    for d in (2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60):
        assert z ** d != ONE


def test_reduction_agrees_with_polynomial_remainder():
    x = sympy.symbols("x")
    phi = sympy.cyclotomic_poly(120, x)
    for k in (32, 45, 77, 119):
        rem = sympy.Poly(sympy.rem(x ** k, phi, x), x).all_coeffs()[::-1]
        rem = rem + [0] * (DIM - len(rem))
        assert zeta(k).coeffs == tuple(Fraction(int(c)) for c in rem)


def test_named_constants():
    assert I * I == -ONE
    assert SQRT2 * SQRT2 == CycloNum(2)
    assert SQRT3 * SQRT3 == CycloNum(3)
    assert SQRT5 * SQRT5 == CycloNum(5)
    assert SQRT2.approx().real == pytest.approx(2 ** 0.5)
    assert SQRT5.approx().real == pytest.approx(5 ** 0.5)


def test_root_of_unity():
    assert root_of_unity(8) * root_of_unity(8) == I
    assert root_of_unity(5, 5) == ONE
    with pytest.raises(ValueError):
        root_of_unity(7)


def test_root_index_and_counts():
    assert root_index(zeta(17)) == 17
    assert root_index(CycloNum(2)) is None
    counts = [0] * 120
    counts[0] = 2
    counts[60] = 1
    assert from_root_counts(counts) == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_str_and_json_roundtrip():
    x = CycloNum.from_powers({0: Fraction(-2, 3), 20: Fraction(4, 3)})
    assert "z^20" in str(x)
    data = x.to_json()
    assert len(data["coeffs"]) == DIM
    assert CycloNum.from_json(data) == x
    assert approx(I) == (0.0, 1.0)


@settings(max_examples=60, deadline=None)
@given(cyclo_nums(), cyclo_nums(), cyclo_nums())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    if a:
        assert a * a.inv() == ONE
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(cyclo_nums(), cyclo_nums())
def test_conjugation_is_field_automorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a
    assert abs(a.conj().approx() - a.approx().conjugate()) < 1e-9


@settings(max_examples=60, deadline=None)
@given(cyclo_nums(), cyclo_nums())
def test_approx_is_homomorphism(a, b):
    assert abs((a * b).approx() - a.approx() * b.approx()) < 1e-6
    assert abs((a + b).approx() - (a.approx() + b.approx())) < 1e-9


def test_nullspace_and_rank():
    M = CycloMatrix.from_rows([[ONE, I, ZERO], [I, -ONE, ZERO]])
    null = nullspace(M)
    assert len(null) == 2
    for v in null:
        assert all(x == ZERO for x in M.apply(v))
    assert rank([[ONE, I], [I, -ONE]]) == 1
    assert rank([[ONE, ZERO], [ZERO, SQRT2]]) == 2
