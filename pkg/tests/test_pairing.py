import random

import pytest

from conftest import algebras
from kashiwara.algebra import basis_of_weight_space
from kashiwara.canonical import weights_up_to
from kashiwara.dsl import parse_expression
from kashiwara.errors import IllegalLetter
from kashiwara.hopf import antipode
from kashiwara.pairing import (
    dual_basis, gram_matrix, pair, pair_oracle, pair_words, verify_pairing_properties,
    verify_split_orders,
)
from kashiwara.scalars import ONE, Scalar

r, s = Scalar.monomial(1, 0), Scalar.monomial(0, 1)


def P(text, alg):
    return parse_expression(text, alg, "U")


def test_pair_examples(A1, A2):
    assert pair(P("e[1]", A1), P("f[1]", A1)) == ONE / (s - r)
    assert pair(P("e[1]", A2), P("f[2]", A2)).is_zero()
    assert pair(P("w[1]", A2), P("v[2]", A2)) == s
    assert pair(P("e[1]^2", A1), P("f[1]^2", A1)) == (1 + r / s) / (s - r) ** 2


def test_pair_rejects_wrong_letters(A1):
    with pytest.raises(IllegalLetter):
        pair(P("f[1]", A1), P("f[1]", A1))


def test_gram_examples(A1, A2):
    assert gram_matrix(A1, (1,)).gram == [[ONE / (s - r)]]
    assert gram_matrix(A1, (2,)).gram == [[(1 + r / s) / (s - r) ** 2]]
    g = gram_matrix(A2, (1, 1))
    assert len(g.gram) == 2
    for i, x in enumerate(g.plus_basis):
        for j, y in enumerate(g.minus_basis):
            assert g.gram[i][j] == pair_oracle(A2, x, y)


def test_dual_basis_examples(A1, A2):
    U = A1.U
    (y,) = dual_basis(A1, (1,))
    assert y == U.letter("f", 0).scale(s - r)
    (y2,) = dual_basis(A1, (2,))
    assert y2 == (U.letter("f", 0) ** 2).scale((s - r) ** 2 / (1 + r / s))
    xs = gram_matrix(A2, (1, 1)).plus_basis
    for i, x in enumerate(xs):
        for j, yj in enumerate(dual_basis(A2, (1, 1))):
            val = pair(A2.U.monomial(right=x), yj)
            assert val == (ONE if i == j else Scalar(0))


def test_antipode_invariance_example(A1):
    e, f = P("e[1]", A1), P("f[1]", A1)
    assert pair(antipode(e), antipode(f)) == ONE / (s - r)


def test_toral_scaling_example(A1):
    c = pair(P("w[1]", A1), P("v[1]", A1))
    assert c == Scalar.monomial(1, -1)


@pytest.mark.parametrize("name,height", [("A1", 5), ("A2", 4), ("B2", 4), ("G2", 4)])
def test_nondegenerate(name, height):
    alg = algebras(name)
    for beta in weights_up_to(alg.n, height, 1):
        assert not gram_matrix(alg, beta).determinant().is_zero()


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_pairing_matches_skew_derivation_oracle(name):
    alg = algebras(name)
    for beta in weights_up_to(alg.n, 3, 1):
        for x in basis_of_weight_space(alg, beta):
            for y in basis_of_weight_space(alg, beta, "minus"):
                assert pair_words(alg, x, y) == pair_oracle(alg, x, y)


def test_weight_orthogonality(A2):
    for x in basis_of_weight_space(A2, (2, 0)):
        for y in basis_of_weight_space(A2, (1, 1), "minus"):
            assert pair_words(A2, x, y, prune=False).is_zero()


def test_split_order_independence(B2):
    rng = random.Random(5)
    pairs = []
    for _ in range(60):
        beta = rng.choice(weights_up_to(2, 4, 1))
        word = [i for i, c in enumerate(beta) for _ in range(c)]
        x, y = word[:], word[:]
        rng.shuffle(x)
        rng.shuffle(y)
        pairs.append((tuple(x), tuple(y)))
    assert verify_split_orders(B2, pairs) == []


@pytest.mark.parametrize("name,height", [("A1", 4), ("A2", 3), ("B2", 2)])
def test_pairing_properties(name, height):
    report = verify_pairing_properties(algebras(name), height)
    assert report.passed, report.failures[:3]
