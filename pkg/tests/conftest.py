import pytest
from hypothesis import strategies as st

from s3quotient.binform import BinaryForm
from s3quotient.cyclo import CycloNum
from s3quotient.groups import CYCLIC, DIHEDRAL, ICOSAHEDRAL, OCTAHEDRAL, TETRAHEDRAL, build

small = st.integers(min_value=-5, max_value=5)


@st.composite
def cyclo_nums(draw, max_terms=4):
    terms = draw(st.dictionaries(st.integers(0, 119), st.fractions(-4, 4, max_denominator=6), max_size=max_terms))
    return CycloNum.from_powers(terms)


@st.composite
def binary_forms(draw, min_degree=0, max_degree=6):
    d = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(cyclo_nums(max_terms=2), min_size=d + 1, max_size=d + 1))
    return BinaryForm(d, coeffs)


@pytest.fixture(scope="session")
def groups():
    """Small representative of every family."""
    return {
        "cyclic5": build(CYCLIC, 5),
        "dihedral3": build(DIHEDRAL, 3),
        "tet": build(TETRAHEDRAL),
        "oct": build(OCTAHEDRAL),
        "ico": build(ICOSAHEDRAL),
    }
