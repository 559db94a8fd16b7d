import pytest

from conftest import algebras
from kashiwara.canonical import (
    c_grade, c_inverse_grade, canonical_tensor, casimir_grade, graded_product,
    verify_basis_independence, verify_c_tilde, verify_casimir_commutation, verify_lemma51,
    verify_prop51,
)
from kashiwara.hopf import TensorElement, antipode, tensor
from kashiwara.scalars import Scalar

r, s = Scalar.monomial(1, 0), Scalar.monomial(0, 1)


def test_canonical_tensor_examples(A1):
    U = A1.U
    e, f = U.letter("e", 0), U.letter("f", 0)
    assert canonical_tensor(A1, (0,)) == TensorElement.one((U, U))
    assert canonical_tensor(A1, (1,)) == tensor(e, f.scale(s - r))
    assert canonical_tensor(A1, (2,)) == tensor(e * e, (f * f).scale((s - r) ** 2 / (1 + r / s)))


def test_c_grade_alpha(A1):
    # (1 (x) k^-1)(1 (x) S^-1)(e (x) (s-r) f) with k^-1 = omega' gives e (x) (r-s) f
    U, B = A1.U, A1.B
    expected = tensor(U.letter("e", 0), B.letter("f", 0).scale(r - s))
    assert c_grade(A1, (1,)) == expected


def test_c_inverse_grade_alpha(A1):
    U = A1.U
    e, f, w, v = (U.letter(k, 0) for k in "efwv")
    sinv = lambda x: antipode(x, "S_inverse")  # noqa: E731
    expected = (tensor(w, v) * tensor(sinv(e), sinv(f.scale(s - r)))).scale(
        Scalar.monomial(-1, 1))
    assert c_inverse_grade(A1, (1,)) == expected.to((U, A1.B))


@pytest.mark.parametrize("name,height", [("A1", 4), ("A2", 3), ("B2", 3)])
def test_inverse_telescopes(name, height):
    alg = algebras(name)
    one = TensorElement.one((alg.U, alg.B))
    for first, second in ((c_inverse_grade, c_grade), (c_grade, c_inverse_grade)):
        prod = graded_product(alg, lambda g: first(alg, g), lambda g: second(alg, g), height)
        for beta, t in prod.items():
            assert t == (one if not any(beta) else TensorElement.zero(one.parents))


def test_e_commutator_example(A1):
    # [1 (x) e, C_alpha] = e (x) omega' - e (x) omega
    U = A1.U
    e, w, v = U.letter("e", 0), U.letter("w", 0), U.letter("v", 0)
    C = canonical_tensor(A1, (1,))
    z = tensor(U.one(), e)
    assert z * C - C * z == tensor(e, v) - tensor(e, w)


@pytest.mark.parametrize("name,height", [("A1", 3), ("A2", 2), ("B2", 2), ("G2", 2)])
def test_canonical_commutators(name, height):
    report = verify_lemma51(algebras(name), height)
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("name,height", [("A1", 4), ("A2", 3), ("B2", 3)])
def test_intertwining(name, height):
    report = verify_prop51(algebras(name), height)
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_auxiliary_inverse_pair(name):
    assert verify_c_tilde(algebras(name), 3).passed


@pytest.mark.parametrize("beta", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_basis_independence(A2, beta):
    from itertools import permutations

    from kashiwara.pairing import gram_matrix

    k = gram_matrix(A2, beta).dimension
    perms = list(permutations(range(k)))[:3]
    assert all(verify_basis_independence(A2, beta, perms))


def test_casimir_examples(A1):
    U = A1.U
    f, e, vinv = U.letter("f", 0), U.letter("e", 0), U.letter("v", 0, -1)
    assert casimir_grade(A1, (0,)) == U.one()
    assert casimir_grade(A1, (1,)) == (f * vinv * e).scale(-(s - r))


@pytest.mark.parametrize("name,L", [("A1", 4), ("A2", 3), ("B2", 3)])
def test_casimir_commutation(name, L):
    report = verify_casimir_commutation(algebras(name), L)
    assert report.passed, report.failures[:3]
