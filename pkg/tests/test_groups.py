import pytest

from s3quotient.binform import S, T
from s3quotient.cyclo import I, ONE
from s3quotient.groups import (
    CYCLIC,
    DIHEDRAL,
    ICOSAHEDRAL,
    OCTAHEDRAL,
    TETRAHEDRAL,
    CertificationError,
    Character,
    GroupElement,
    build,
    certify_elements,
    character_of,
    closure,
    commutator_subgroup_order,
    invariant_dim_by_elimination,
    is_invariant,
    molien_dim,
)
from s3quotient.invariants import tetrahedral_vertex_form


@pytest.mark.parametrize("name,n,order", [
    (CYCLIC, 1, 1), (CYCLIC, 6, 6), (DIHEDRAL, 2, 8), (DIHEDRAL, 5, 20),
    (TETRAHEDRAL, None, 24), (OCTAHEDRAL, None, 48), (ICOSAHEDRAL, None, 120),
])
def test_orders(name, n, order):
    G = build(name, n)
    assert G.order == order
    certify_elements(G)


def test_bad_parameters():
    with pytest.raises(ValueError):
        build(CYCLIC, 7)
    with pytest.raises(ValueError):
        build("klein")


def test_closure_bound():
    g = GroupElement.diag(I, -I)
    elems, _ = closure([g])
    assert len(elems) == 4
    with pytest.raises(CertificationError):
        closure([g], bound=2)


def test_group_json(groups):
    data = groups["tet"].to_json()
    assert data["order"] == 24
    assert data["center_size"] == 2


def test_inverse_and_adjoint(groups):
    for g in groups["oct"].elements:
        assert g * g.inverse() == GroupElement.identity()
        assert g.inverse() == g.adjoint()
        assert g.det() == ONE


def test_characters(groups):
    chi = character_of(tetrahedral_vertex_form(), groups["tet"], exhaustive=True)
    assert chi.order == 3
    assert chi.is_homomorphism()
    assert (chi ** 3).is_trivial()
    assert chi * chi.conj() == Character.trivial(groups["tet"])
    assert character_of(S, groups["tet"]) is None
    with pytest.raises(ValueError):
        character_of(S - S, groups["tet"])


def test_generator_check_matches_exhaustive(groups):
    f = S * T * (S ** 4 - T ** 4)
    for G in groups.values():
        assert character_of(f, G) == character_of(f, G, exhaustive=True)


@pytest.mark.parametrize("key", ["cyclic5", "dihedral3", "tet", "oct"])
def test_molien_two_oracles(groups, key):
    G = groups[key]
    for d in range(0, 13):
        assert molien_dim(G, d) == invariant_dim_by_elimination(G, d)


def test_molien_icosahedral_low_degrees(groups):
    G = groups["ico"]
    dims = [molien_dim(G, d) for d in range(31)]
    assert dims[0] == 1
    assert [d for d in range(1, 31) if dims[d]] == [12, 20, 24, 30]
    assert (dims[12], dims[20], dims[30]) == (1, 1, 1)


def test_molien_odd_degree_vanishes_with_center(groups):
    for G in groups.values():
        if G.contains_minus_identity():
            assert all(molien_dim(G, d) == 0 for d in range(1, 20, 2))


def test_is_invariant(groups):
    assert is_invariant(S * T, build(CYCLIC, 4))
    assert not is_invariant(S ** 4, build(CYCLIC, 3))


def test_commutator_subgroups(groups):
    # abelianizations of orders 3, 2, 1
    assert commutator_subgroup_order(groups["tet"]) == 8
    assert commutator_subgroup_order(groups["oct"]) == 24
    assert commutator_subgroup_order(groups["ico"]) == 120
