import pytest

from kashiwara.errors import BadIndex, ConfigError
from kashiwara.rootdata import (
    cartan_type, euler_form, parse_weight, q_binomial, q_factorial, q_number, serre_coefficient,
)
from kashiwara.scalars import ONE, ZERO, Scalar

v = Scalar.monomial(1, -1)
SHIPPED = ["A1", "A2", "A3", "B2", "G2"]


def test_euler_examples():
    ct = cartan_type("A2")
    assert euler_form(ct, (1, 0), (0, 1)) == -1
    assert euler_form(ct, (0, 1), (1, 0)) == 0
    assert euler_form(ct, (1, 1), (1, 1)) == 1


@pytest.mark.parametrize("name", SHIPPED)
def test_euler_diagonal_and_symmetrization(name):
    ct = cartan_type(name)
    n = ct.rank
    for i in range(n):
        assert ct.euler(i, i) == ct.d[i]
        for j in range(n):
            assert ct.d[i] * ct.cartan_matrix[i][j] == ct.d[j] * ct.cartan_matrix[j][i]
            sym = ct.euler(i, j) + ct.euler(j, i)
            assert sym == ct.d[i] * ct.cartan_matrix[i][j]


def test_q_numbers():
    assert q_number(3, v) == 1 + v + v * v
    assert q_number(0, v) == ZERO
    assert q_number(1, v) == ONE
    assert q_factorial(3, v) == (1 + v) * (1 + v + v * v)


def test_q_binomial_examples():
    assert q_binomial(2, 1, v) == 1 + v
    assert q_binomial(5, 0, v) == ONE
    assert q_binomial(4, 2, v) == (1 + v ** 2) * (1 + v + v ** 2)
    with pytest.raises(BadIndex):
        q_binomial(2, 3, v)


def test_pascal_identity():
    for m in range(9):
        for n in range(1, m + 1):
            lhs = q_binomial(m + 1, n, v)
            rhs = q_binomial(m, n, v) + v ** (m + 1 - n) * q_binomial(m, n - 1, v)
            assert lhs == rhs


def test_serre_coefficients():
    ct = cartan_type("A2")
    s = Scalar.monomial(0, 1)
    assert serre_coefficient(ct, 0, 1, 1) == s
    assert serre_coefficient(ct, 0, 1, 0) == ONE
    assert serre_coefficient(ct, 0, 1, 2) == Scalar.monomial(1, 1)
    with pytest.raises(BadIndex):
        serre_coefficient(ct, 0, 0, 1)


def test_shipped_conventions():
    b2, g2 = cartan_type("B2"), cartan_type("G2")
    assert b2.cartan_matrix == ((2, -2), (-1, 2)) and b2.d == (1, 2)
    assert g2.cartan_matrix == ((2, -3), (-1, 2)) and g2.d == (1, 3)


def test_bad_types_and_weights():
    with pytest.raises(ConfigError):
        cartan_type("E9")
    with pytest.raises(ConfigError):
        parse_weight("1,2", 3)
    assert parse_weight("1, -2", 2) == (1, -2)
