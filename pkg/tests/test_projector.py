import pytest

from conftest import algebras
from kashiwara.errors import HeightExceeded, WrongType
from kashiwara.projector import gamma, gamma_sl2_closed, is_toral_free, verify_theorem61
from kashiwara.scalars import Scalar

q = Scalar.monomial(1, -1)


def test_gamma_low_grades(A1):
    B = A1.B
    f, E = B.letter("f", 0), B.letter("E", 0)
    G = gamma(A1, 3)
    assert G.grade((0,)) == B.one()
    assert G.grade((1,)) == -(f * E)
    assert G.grade((2,)) == (f * f * E * E).scale(q / (1 + q))
    assert G.grade((3,)) == (f ** 3 * E ** 3).scale(-q ** 3 / ((1 + q) * (1 + q + q * q)))


@pytest.mark.parametrize("L", range(7))
def test_closed_form_agrees(A1, L):
    G, closed = gamma(A1, L), gamma_sl2_closed(A1, L)
    assert G.grades == closed.grades


def test_closed_form_needs_rank_one(A2):
    with pytest.raises(WrongType):
        gamma_sl2_closed(A2, 2)


def test_cutoff_is_enforced(A1):
    with pytest.raises(HeightExceeded):
        gamma(A1, 7)


def test_every_grade_is_toral_free(B2):
    for g in gamma(B2, 3).grades.values():
        assert is_toral_free(g)


@pytest.mark.parametrize("name,L", [("A1", 5), ("A2", 3), ("B2", 3), ("G2", 3)])
def test_projector_properties(name, L):
    report = verify_theorem61(algebras(name), L)
    assert report.passed, report.failures[:3]


def test_a3_projector():
    report = verify_theorem61(algebras("A3"), 3)
    assert report.passed, report.failures[:3]
