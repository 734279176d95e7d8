from fractions import Fraction

import pytest

from s3quotient.binform import S, T, cross, hessian
from s3quotient.cyclo import I, SQRT3
from s3quotient.groups import CYCLIC, DIHEDRAL, build, character_of, molien_dim
from s3quotient.invariants import (
    fundamental,
    generation_table,
    monomial_exponents,
    octahedral_vertex_form,
    power_sum,
    syzygy,
    tetrahedral_vertex_form,
)


@pytest.fixture(scope="module")
def systems(groups):
    return {k: fundamental(G) for k, G in groups.items()}


def test_polyhedral_degrees(systems):
    assert systems["tet"].degrees == (6, 8, 12)
    assert systems["oct"].degrees == (8, 12, 18)
    assert systems["ico"].degrees == (12, 20, 30)


def test_tetrahedral_forms(systems):
    sys = systems["tet"]
    assert sys.P == octahedral_vertex_form()
    assert sys.characters["V"].order == 3
    # hessian of V is the conjugate-type quartic
    conj_v = S ** 4 + T ** 4 - (S ** 2 * T ** 2).scale(2 * I * SQRT3)
    assert sys.named["Vc"].ratio_to(conj_v) is not None
    assert cross(hessian(tetrahedral_vertex_form()), tetrahedral_vertex_form()).ratio_to(sys.P) is not None


def test_octahedral_seed(systems):
    sys = systems["oct"]
    assert sys.characters["S"].order == 2
    assert sys.characters["S_cross"].order == 2
    assert sys.Q.ratio_to(sys.seed ** 2) == Fraction(1, 54)


def test_syzygy_coefficients(systems):
    exp_coeff = {
        "tet": {(0, 0, 2): 1, (0, 3, 0): Fraction(1, 2), (4, 0, 0): Fraction(1, 108)},
        "oct": {(0, 0, 2): 1, (0, 3, 0): Fraction(1, 2), (3, 1, 0): Fraction(1, 108)},
        "ico": {(0, 0, 2): 1, (0, 3, 0): Fraction(1, 2), (5, 0, 0): Fraction(-1, 432)},
    }
    for key, expected in exp_coeff.items():
        syz = systems[key].syzygy
        got = {e: c.to_rational() for e, c in zip(syz.exponents, syz.coeffs) if c}
        assert got == expected
        assert syz.evaluate(systems[key].P, systems[key].Q, systems[key].R).is_zero()


def test_syzygy_rejects_exceptional(systems):
    with pytest.raises(ValueError):
        syzygy(systems["cyclic5"])


def test_exceptional_systems(systems):
    cyc, dih = systems["cyclic5"], systems["dihedral3"]
    assert cyc.exceptional and dih.exceptional
    assert hessian(S * T).coeffs[0] == Fraction(-1, 2)
    assert dih.characters["Z"].order == 4  # n odd: s^n + i t^n
    assert dih.characters["X"].is_trivial()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_dihedral_semi_invariant_convention(n):
    G = build(DIHEDRAL, n)
    chi = character_of(power_sum(n, 1 if n % 2 == 0 else I), G)
    assert chi is not None and not chi.is_trivial()


def test_monomial_exponents():
    assert monomial_exponents((6, 8, 12), 24) == [(0, 0, 2), (0, 3, 0), (2, 0, 1), (4, 0, 0)]


def test_generation_short(systems):
    for key in ("cyclic5", "dihedral3", "tet", "oct"):
        assert all(r["match"] for r in generation_table(systems[key], 30))


def test_cyclic_generation_matches_molien():
    G = build(CYCLIC, 4)
    sys = fundamental(G)
    rows = generation_table(sys, 12)
    assert [r["molien"] for r in rows] == [molien_dim(G, d) for d in range(13)]
    assert all(r["match"] for r in rows)


def test_json_shape(systems):
    data = systems["ico"].to_json()
    assert data["degrees"] == [12, 20, 30]
    assert set(data["forms"]) == {"P", "Q", "R"}
    assert "= 0" in data["syzygy"]["text"]
