from fractions import Fraction

import pytest

from s3quotient.algebra import (
    DESCENDANT,
    NORMALIZATION,
    ZERO_CLASS,
    Vocabulary,
    decompose_product,
    pairing_spans,
    product_basis_rank,
    projective_coords,
    pseudoreality,
    relation_scan,
    spin1_relations,
    verify_claims,
)
from s3quotient.binform import BinaryForm, S, T, transvectant
from s3quotient.groups import CYCLIC, CertificationError, build
from s3quotient.invariants import fundamental, power_sum
from s3quotient.sphere import multiplet_from_hw


def _decompose(G, a, b=None):
    sys = fundamental(G)
    b = b or a
    return decompose_product(multiplet_from_hw(sys.named[a]), multiplet_from_hw(sys.named[b]), G,
                             Vocabulary.for_system(sys), sys.characters[a], sys.characters[b], (a, b))


def _by_spin(comps):
    return {c.two_j: c for c in comps}


def test_tetrahedral_square(groups):
    comps = _by_spin(_decompose(groups["tet"], "V"))
    assert comps[0].classification == ZERO_CLASS
    assert comps[4].classification == DESCENDANT
    assert comps[4].descendant and "Vc" in comps[4].descendant
    assert all(c.sphere_checked for c in comps.values())


def test_octahedral_square(groups):
    comps = _by_spin(_decompose(groups["oct"], "S"))
    assert comps[12].classification == DESCENDANT
    assert comps[8].classification == DESCENDANT
    assert comps[4].classification == ZERO_CLASS
    assert comps[0].classification == NORMALIZATION and comps[0].constant


def test_icosahedral_square(groups):
    comps = _by_spin(_decompose(groups["ico"], "P"))
    assert comps[20].classification == DESCENDANT and "Q" in comps[20].descendant
    for two_j in (16, 8, 4):
        assert comps[two_j].classification == ZERO_CLASS
    assert comps[12].constant.to_rational() == Fraction(-5, 84)
    assert comps[0].constant.to_rational() == Fraction(25, 84)


def test_decompose_requires_semi_invariant(groups):
    M = multiplet_from_hw(S ** 3)
    with pytest.raises(ValueError):
        decompose_product(M, M, groups["tet"])


def test_scan_aborts_on_wrong_group():
    # st(s^4 - t^4) is not semi-invariant under the cyclic group of order 3
    with pytest.raises(ValueError):
        relation_scan(build(CYCLIC, 3), [("f", S * T * (S ** 4 - T ** 4))], 12, 2)
    with pytest.raises(ValueError):
        relation_scan(build(CYCLIC, 3), [("st", S * T)], 61, 2)


def test_cyclic_scan_relations():
    for n in (3, 4, 5, 6):
        G = build(CYCLIC, n)
        X = power_sum(n)
        assert transvectant(S * T, X, 2).is_zero()
        assert transvectant(S * T, X, 1).ratio_to(S ** n - T ** n) is not None
        scan = relation_scan(G, [("st", S * T), ("X", X)], 3 * n, 2)
        assert scan.relations()


def test_scan_associativity(groups):
    """(M x M) x M and M x (M x M) reach the same highest-weight spans."""
    V = fundamental(groups["tet"]).named["V"]
    left = pairing_spans([V], [V])
    one = [f for fs in left.values() for f in fs]
    a = pairing_spans(one, [V])
    b = pairing_spans([V], one)
    assert a.keys() == b.keys()
    for two_j in a:
        combined = a[two_j] + b[two_j]
        assert product_basis_rank(a[two_j]) == product_basis_rank(b[two_j]) == product_basis_rank(combined)


def test_projective_coords(groups):
    M, chi = projective_coords(groups["tet"])
    assert len(M.components) == 5 and chi.order == 3
    M, chi = projective_coords(groups["oct"])
    assert len(M.components) == 7 and chi.order == 2
    M, chi = projective_coords(groups["ico"])
    assert len(M.components) == 13 and chi.is_trivial()
    with pytest.raises(ValueError):
        projective_coords(groups["cyclic5"])


def test_pseudoreality_odd_n():
    for n in (1, 3, 5, 7):
        ok, _ = pseudoreality(n)
        assert ok


def test_spin1_relation():
    funcs, rels = spin1_relations()
    assert len(rels) == 1


@pytest.mark.parametrize("key", ["cyclic5", "dihedral3", "tet", "oct"])
def test_claim_battery_passes(groups, key):
    reports = verify_claims(groups[key], 36)
    failed = [r.id for r in reports if not r.passed]
    assert not failed
    assert len({r.id for r in reports}) == len(reports)


def test_claim_report_json(groups):
    rep = verify_claims(build(CYCLIC, 4), 12)[0]
    assert set(rep.to_json()) == {"id", "quote", "status", "witness"}
