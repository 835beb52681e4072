# test_algebra.py - tests of block algebras, their states and norms.


import numpy as np
import pytest

from ..algebra.block import AlgebraState, BlockAlgebra, cstar_norm, \
    element_from_direct_sum, element_spectrum, element_to_direct_sum, \
    outcome_distribution, outcome_probability, random_algebra_state, \
    random_element, sampled_state_norm, state_value, \
    superselection_indistinguishability
from ..linalg.core import PAULI_X, PAULI_Z
from ..linalg.rand import random_state
from ..utils.errors import AlgebraMismatch, InvalidState, NotNormal, \
    NotNormalized, NotSymmetric
from .utils import assert_close


def test_dimensions():
    A = BlockAlgebra([2, 1])
    assert A.dim == 5
    assert A.total_dim == 3
    assert A.n_blocks == 2
    labels, elems = A.matrix_units()
    assert len(labels) == 5
    assert labels[0] == (0, 0, 0)
    assert labels[-1] == (1, 0, 0)


def test_element_arithmetic():
    A = BlockAlgebra([2, 1])
    x = random_element(A, seed = 1)
    y = random_element(A, seed = 2)
    assert_close((A.unit() * x).coefficients(), x.coefficients(), 1e-15)
    assert_close(x.star().star().coefficients(), x.coefficients(), 0.5e-15)
    assert_close((x * y).star().coefficients(),
                 (y.star() * x.star()).coefficients(), 1e-12)
    assert_close((x - x).coefficients(), A.zero().coefficients(), 1e-15)
    with pytest.raises(AlgebraMismatch):
        x * random_element(BlockAlgebra([2]), seed = 3)


def test_direct_sum_embedding():
    A = BlockAlgebra([2, 1])
    x = random_element(A, seed = 5)
    M = element_to_direct_sum(x)
    assert M.shape == (3, 3)
    assert_close(element_from_direct_sum(A, M).coefficients(),
                 x.coefficients(), 1e-15)
    M[0, 2] = 1.0
    with pytest.raises(AlgebraMismatch):
        element_from_direct_sum(A, M)


def test_cstar_identity():
    A = BlockAlgebra([3, 2])
    for seed in range(10):
        x = random_element(A, seed = seed)
        assert abs(cstar_norm(x.star() * x) - cstar_norm(x) ** 2) < \
            1e-10 * cstar_norm(x) ** 2


def test_sampled_norm_approaches_from_below():
    A = BlockAlgebra([2, 1])
    x = random_element(A, seed = 8)
    n = cstar_norm(x)
    s = sampled_state_norm(x, samples = 5000, seed = 1)
    assert s <= n + 1e-12
    assert s >= 0.99 * n


def test_state_validation():
    A = BlockAlgebra([2, 1])
    with pytest.raises(InvalidState):
        AlgebraState(A, [0.5, 0.6], [np.eye(2) / 2, np.eye(1)])
    with pytest.raises(InvalidState):
        AlgebraState(A, [0.5, 0.5], [np.eye(2), np.eye(1)])
    with pytest.raises(InvalidState):
        AlgebraState(A, [1.0], [np.eye(2) / 2])


def test_state_value_of_unit():
    A = BlockAlgebra([2, 2, 1])
    for seed in range(5):
        omega = random_algebra_state(A, seed = seed)
        assert abs(state_value(omega, A.unit()) - 1) < 1e-12


def test_spectrum_and_outcomes():
    A = BlockAlgebra([2])
    omega = AlgebraState(A, [1.0], [np.diag([1.0, 0.0])])
    x = A.element([PAULI_X])
    dist = outcome_distribution(omega, x)
    assert len(dist) == 2
    assert_close([z for z, _ in dist], [-1, 1], 1e-12)
    assert_close([p for _, p in dist], [0.5, 0.5], 1e-12)
    assert abs(outcome_probability(omega, A.element([PAULI_Z]), 1.0) - 1) < 1e-12
    assert outcome_probability(omega, x, 3.0) == 0.0


def test_outcomes_across_blocks():
    A = BlockAlgebra([1, 1])
    omega = AlgebraState(A, [0.25, 0.75], [np.eye(1), np.eye(1)])
    x = A.element([np.eye(1), 2 * np.eye(1)])
    dist = outcome_distribution(omega, x)
    assert_close([p for _, p in dist], [0.25, 0.75], 1e-14)
    assert sorted(z for z, _ in element_spectrum(x)) == [1.0, 2.0]


def test_non_symmetric_and_non_normal():
    A = BlockAlgebra([2])
    omega = random_algebra_state(A, seed = 1)
    x = A.element([np.array([[0, 1], [0, 0]])])
    with pytest.raises(NotSymmetric):
        outcome_probability(omega, x, 0.0)
    with pytest.raises(NotNormal):
        element_spectrum(x)


def test_superselection():
    A = BlockAlgebra([2, 1])
    c = [1 / np.sqrt(2), 1 / np.sqrt(2)]
    pures = [random_state(2, seed = 4), np.ones(1)]
    d = superselection_indistinguishability(A, c, pures, samples = 300, seed = 1)
    assert d < 1e-10
    d = superselection_indistinguishability(A, c, pures, samples = 10, seed = 1,
                                            full_algebra = True)
    assert d > 0.5
    with pytest.raises(NotNormalized):
        superselection_indistinguishability(A, [1, 1], pures)


def test_cauchy_schwarz():
    algebras = [BlockAlgebra(d) for d in ([2], [2, 1], [3, 1, 1])]
    for i in range(30):
        A = algebras[i % len(algebras)]
        omega = random_algebra_state(A, seed = i)
        x = random_element(A, seed = 100 + i)
        y = random_element(A, seed = 200 + i)
        lhs = abs(omega(y.star() * x)) ** 2
        rhs = np.real(omega(x.star() * x)) * np.real(omega(y.star() * y))
        assert lhs <= rhs * (1 + 1e-10) + 1e-12


def test_norm_is_submultiplicative():
    A = BlockAlgebra([3, 2])
    for seed in range(20):
        x = random_element(A, seed = seed)
        y = random_element(A, seed = seed + 50)
        assert cstar_norm(x * y) <= cstar_norm(x) * cstar_norm(y) * (1 + 1e-12)


def test_positive_elements_have_non_negative_spectrum():
    A = BlockAlgebra([2, 2, 1])
    for seed in range(10):
        x = random_element(A, seed = seed)
        xx = x.star() * x
        z = [v for v, _ in element_spectrum(xx)]
        assert min(z) >= -1e-12 * cstar_norm(xx)


def test_state_of_adjoint_is_conjugate():
    A = BlockAlgebra([2, 1])
    for seed in range(10):
        omega = random_algebra_state(A, seed = seed)
        x = random_element(A, seed = seed + 20)
        assert abs(omega(x.star()) - np.conj(omega(x))) < 1e-12
