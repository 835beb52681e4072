# test_born.py - tests of frame functions, the Born rule and the
# conditional-probability protocols.


import numpy as np
import pytest

from ..bell.ks import peres33_set
from ..born.evolve import heisenberg_evolve, picture_equivalence, \
    schrodinger_evolve
from ..born.frame import FrameSample, fit_density_from_frame, \
    frame_from_density, frame_sample_from_density, frame_verdict, \
    ks_zero_one_sample, random_rays
from ..born.protocol import born_probability, conditional_probability, \
    expectation_from_projectors, luders_update, observable_from_projectors, \
    protocol_backward, protocol_forward
from ..linalg.core import PAULI_X, PAULI_Z
from ..linalg.rand import get_rng, random_density, random_hermitian, \
    random_projector, random_state, random_unitary, spawn_seeds
from ..utils.errors import InsufficientSamples, InvalidMatrix, \
    NotOrthogonalFamily, ZeroProbability, ZeroProjector
from ..utils.xmatrix import ket2dm
from .utils import assert_close


### Frame functions

def test_frame_values_sum_to_one_on_bases():
    rho = random_density(3, seed = 1)
    e = np.eye(3)
    assert abs(sum(frame_from_density(rho, e[i]) for i in range(3)) - 1) \
        < 1e-12


def test_fit_recovers_hidden_density():
    rho = random_density(3, seed = 2)
    sample = frame_sample_from_density(rho, random_rays(3, 50, seed = 3))
    fit, residual = fit_density_from_frame(sample, dim = 3)
    assert np.linalg.norm(fit - rho) < 1e-8
    assert residual < 1e-6
    assert frame_verdict(residual) == "quantum-consistent"


def test_fit_needs_enough_rays():
    rho = random_density(3, seed = 2)
    sample = frame_sample_from_density(rho, random_rays(3, 8, seed = 3))
    with pytest.raises(InsufficientSamples):
        fit_density_from_frame(sample)


def test_zero_one_sample_is_not_a_quadratic_form():
    sample = ks_zero_one_sample(peres33_set())
    assert len(sample) == 33
    assert set(np.unique(sample.values)) <= {0.0, 1.0}
    _, residual = fit_density_from_frame(sample, dim = 3)
    assert residual >= 1e-3
    assert frame_verdict(residual) == "non-frame"


def test_frame_sample_validation():
    with pytest.raises(InvalidMatrix):
        FrameSample(np.eye(2), [0.5, 1.5])


def test_frame_value_ignores_global_phase():
    rho = random_density(4, seed = 7)
    rng = get_rng(8)
    for i in range(20):
        e = random_state(4, rng)
        ph = np.exp(2j * np.pi * rng.random())
        assert abs(frame_from_density(rho, ph * e) - \
                   frame_from_density(rho, e)) < 1e-14


def test_frame_normalized_on_random_bases():
    rho = random_density(3, seed = 9)
    rng = get_rng(10)
    for i in range(1000):
        U = random_unitary(3, rng)
        s = sum(frame_from_density(rho, U[:, k]) for k in range(3))
        assert abs(s - 1) < 1e-12


def test_fit_round_trip_over_dimensions():
    for d in range(3, 7):
        rho = random_density(d, seed = d)
        rays = random_rays(d, 2 * d * d, seed = 10 + d)
        fit, residual = fit_density_from_frame(
            frame_sample_from_density(rho, rays), dim = d)
        assert np.linalg.norm(fit - rho) < 1e-8
        assert frame_verdict(residual) == "quantum-consistent"


### Born rule and Lüders update

def test_born_probability():
    e = np.eye(2)
    plus = np.array([1, 1]) / np.sqrt(2)
    assert abs(born_probability(plus, e[0]) - 0.5) < 1e-15
    assert born_probability(e[0], e[1]) == 0.0


def test_luders_repeatability():
    rho = random_density(4, seed = 5)
    P = random_projector(4, 2, seed = 6)
    post, p = luders_update(rho, P)
    assert abs(p - np.real(np.trace(P @ rho))) < 1e-12
    post2, p2 = luders_update(post, P)
    assert abs(p2 - 1) < 1e-12
    assert_close(post2, post, 1e-12)


def test_luders_zero_probability():
    e = np.eye(2)
    with pytest.raises(ZeroProbability):
        luders_update(ket2dm(e[0]), ket2dm(e[1]))


def test_spectral_family():
    e = np.eye(2)
    fam = [(1.0, ket2dm(e[0])), (-1.0, ket2dm(e[1]))]
    assert_close(observable_from_projectors(fam), PAULI_Z, 1e-15)
    rho = random_density(2, seed = 3)
    assert abs(expectation_from_projectors(fam, rho) - \
               np.real(np.trace(rho @ PAULI_Z))) < 1e-12
    plus = np.array([1, 1]) / np.sqrt(2)
    with pytest.raises(NotOrthogonalFamily):
        observable_from_projectors([(1.0, ket2dm(e[0])), (2.0, ket2dm(plus))])


### Protocols

def test_conditional_probability():
    e = np.eye(2)
    plus = np.array([1, 1]) / np.sqrt(2)
    assert abs(conditional_probability(ket2dm(e[0]), ket2dm(plus)) - 0.5) \
        < 1e-12
    with pytest.raises(ZeroProjector):
        conditional_probability(np.zeros((2, 2)), ket2dm(plus))


def test_forward_and_backward_agree():
    rng = get_rng(11)
    for i in range(100):
        d = int(rng.integers(2, 7))
        P_A = random_projector(d, int(rng.integers(1, d + 1)), rng)
        P_B = random_projector(d, int(rng.integers(0, d + 1)), rng)
        s_f, s_b = spawn_seeds(i, 2)
        f = protocol_forward(P_A, P_B, 100000, s_f)
        b = protocol_backward(P_A, P_B, 100000, s_b)
        assert f.analytic_prob == b.analytic_prob
        se = np.sqrt(f.std_error ** 2 + b.std_error ** 2)
        assert abs(f.empirical_prob - b.empirical_prob) <= 4 * se + 1e-12


def test_backward_conditions_on_a():
    P_A = ket2dm(np.eye(3)[0])
    P_B = random_projector(3, 2, seed = 4)
    b = protocol_backward(P_A, P_B, 20000, seed = 1)
    # P(A TRUE) = tr(P_A)/N = 1/3
    assert abs(b.n_conditioned / 20000 - 1 / 3) < 0.02
    assert b.to_dict()["protocol"] == "backward"


def test_forward_samples_pure_states_of_range():
    # range(P_A) = span{e0, e1}; B is TRUE on e0 and FALSE on e1
    P_A = np.diag([1.0, 1.0, 0.0])
    P_B = np.diag([1.0, 0.0, 0.0])
    f = protocol_forward(P_A, P_B, 5000, seed = 7)
    assert f.analytic_prob == 0.5
    rng = get_rng(7)
    idx = rng.integers(0, 2, size = 5000)
    assert f.empirical_prob in (np.mean(idx == 0), np.mean(idx == 1))
    assert abs(f.empirical_prob - 0.5) <= 4 * f.std_error


def test_forward_rank_one_projectors():
    psi = random_state(4, seed = 2)
    phi = random_state(4, seed = 3)
    q = born_probability(phi, psi)
    f = protocol_forward(ket2dm(psi), ket2dm(phi), 40000, seed = 5)
    assert abs(f.analytic_prob - q) < 1e-12
    assert abs(f.empirical_prob - q) <= 4 * f.std_error


### Pictures

def test_picture_equivalence():
    psi = random_state(4, seed = 1)
    H = random_hermitian(4, seed = 2)
    A = random_hermitian(4, seed = 3)
    assert picture_equivalence(psi, A, H, 1.7) < 1e-12


def test_evolution_examples():
    e = np.eye(2)
    psi = schrodinger_evolve(e[0], PAULI_X, np.pi / 2)
    assert abs(abs(psi[1]) - 1) < 1e-12
    At = heisenberg_evolve(PAULI_Z, PAULI_X, np.pi / 4)
    # ±σy
    assert abs(abs(At[0, 1]) - 1) < 1e-12
    assert abs(At[0, 0]) < 1e-12


def test_energy_is_conserved():
    rng = get_rng(14)
    for i in range(10):
        d = int(rng.integers(2, 7))
        psi = random_state(d, rng)
        H = random_hermitian(d, rng)
        t = 10 * rng.random()
        pt = schrodinger_evolve(psi, H, t)
        assert abs(np.linalg.norm(pt) - 1) < 1e-12
        assert abs(np.vdot(pt, H @ pt) - np.vdot(psi, H @ psi)) < 1e-12
