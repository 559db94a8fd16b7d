import random

import pytest

from conftest import algebras
from kashiwara.category_o import (
    DirectSum, VermaModule, gamma_apply, kernel, sample_weights, simplicity_probe,
    verify_category_o, verify_complement, verify_decomposition, verify_gamma_idempotent,
    verify_module_axioms,
)
from kashiwara.errors import DepthExceeded
from kashiwara.projector import gamma
from kashiwara.rootdata import q_number
from kashiwara.scalars import Scalar

q = Scalar.monomial(1, -1)
TYPES = ["A1", "A2", "B2", "G2"]


@pytest.mark.parametrize("lam", [(0,), (2,), (-3,)])
@pytest.mark.parametrize("m", range(5))
def test_e_lowers_f_power(A1, lam, m):
    """e'' f^m u = (1 + q + ... + q^(m-1)) f^(m-1) u whatever lambda is."""
    M = VermaModule(A1, lam, 5)
    got = M.act(A1.B.letter("E", 0), M.basis_vector((0,) * m))
    expected = M.vector({}) if m == 0 else M.basis_vector((0,) * (m - 1)).scale(
        sum((q ** k for k in range(m)), Scalar(0)))
    assert got == expected


def test_q_number_matches_lowering(A1):
    M = VermaModule(A1, (1,), 4)
    got = M.act(A1.B.letter("E", 0), M.basis_vector((0, 0, 0)))
    assert got.comps[(0, 0)] == q_number(3, q) == 1 + q + q * q


@pytest.mark.parametrize("lam,expected", [((0,), Scalar(1)), ((1,), q), ((2,), q * q),
                                          ((-1,), 1 / q)])
def test_toral_eigenvalue(A1, lam, expected):
    M = VermaModule(A1, lam, 2)
    assert M.act(A1.B.letter("w", 0), M.highest()) == M.highest().scale(expected)
    assert M.act(A1.B.letter("v", 0), M.highest()) == M.highest().scale(1 / expected)


@pytest.mark.parametrize("name", TYPES)
def test_slice_dimensions_are_kostant(name):
    alg = algebras(name)
    M = VermaModule(alg, (0,) * alg.n, 3)
    for w, keys in M.slices().items():
        assert len(keys) == len(set(keys))
        beta = tuple(-c for c in w)
        assert all(M.key_weight(k) == w and sorted(k) == sorted(
            i for i, c in enumerate(beta) for _ in range(c)) for k in keys)


@pytest.mark.parametrize("name", TYPES)
@pytest.mark.parametrize("index", range(5))
def test_kernel_is_highest_line(name, index):
    alg = algebras(name)
    lam = sample_weights(alg.n)[index]
    K = kernel(VermaModule(alg, lam, 4))
    assert len(K) == 1 and K[0].comps.keys() == {()}


def test_kernel_of_direct_sum_has_two_lines(A2):
    S = DirectSum([VermaModule(A2, (0, 0), 3), VermaModule(A2, (1, 0), 3)])
    assert len(kernel(S)) == 2


def test_gamma_on_low_vectors(A1):
    M = VermaModule(A1, (1,), 4)
    G = gamma(A1, 3)
    assert gamma_apply(G, M.highest()) == M.highest()
    for m in (1, 2, 3):
        assert gamma_apply(G, M.basis_vector((0,) * m)).is_zero()
    with pytest.raises(DepthExceeded):
        gamma_apply(gamma(A1, 1), M.basis_vector((0, 0)))


@pytest.mark.parametrize("name", ["A1", "A2", "B2"])
def test_decomposition(name):
    alg = algebras(name)
    for lam in sample_weights(alg.n)[:3]:
        report = verify_decomposition(VermaModule(alg, lam, 4), 3, gamma_trunc=gamma(alg, 3))
        assert report.passed, report.failures[:3]


def test_simplicity_needs_longer_word_in_a2(A2):
    report = simplicity_probe(VermaModule(A2, (0, 0), 3), 2)
    assert report.passed
    witness = [e for e in report.entries if e.identity == "simplicity-witness"
               and e.instance.startswith("f[1]*f[2]*u")]
    assert witness and "E" in witness[0].instance


@pytest.mark.parametrize("name", TYPES)
def test_module_axioms(name):
    alg = algebras(name)
    report = verify_module_axioms(VermaModule(alg, (1,) + (0,) * (alg.n - 1), 4),
                                  random.Random(1), 5)
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("name", ["A1", "A2"])
def test_gamma_idempotent_on_module(name):
    alg = algebras(name)
    report = verify_gamma_idempotent(VermaModule(alg, (0,) * alg.n, 4), gamma(alg, 3))
    assert report.passed


@pytest.mark.parametrize("lams", [((0,), (-3,)), ((1,), (1,)), ((2,), (0,))])
def test_complement(A1, lams):
    S = DirectSum([VermaModule(A1, lam, 4) for lam in lams])
    report = verify_complement(S, S.embed(0, S.summands[0].highest()), 3)
    assert report.passed, report.failures[:3]


@pytest.mark.parametrize("name", TYPES)
def test_category_o_suite(name):
    alg = algebras(name)
    report = verify_category_o(alg, sample_weights(alg.n), 4)
    assert report.passed, report.failures[:3]


def test_mutation_breaks_gamma_image():
    alg = algebras("A2", delta_sign=-1)
    report = verify_category_o(alg, sample_weights(2)[:2], 3)
    bad = [e for e in report.failures if e.identity == "gamma-image"]
    assert bad and "Gamma" in bad[0].witness
