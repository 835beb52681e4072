# test_decoherence.py - tests of the measurement model and the pointer
# overlap statistics.


import numpy as np
import pytest

from ..config import Config
from ..decoherence.main import decohere_core
from ..decoherence.model import MeasurementModel, apparatus_marginal, \
    measure_evolution, measurement_chain, orthogonal_pointer_model, \
    overlap_scaling_experiment, random_measurement_model, \
    reduced_system_state, repeated_measurement, \
    repeated_outcome_distribution, short_time_fit
from ..linalg.core import PAULI_Z
from ..utils.errors import DimensionMismatch, NotNormalized
from ..utils.xmatrix import ket2dm
from .utils import assert_close


ALPHA = 0.6
BETA = 0.8j


def test_reduced_state_coherence_is_pointer_overlap():
    for s in range(20):
        m = random_measurement_model(6, seed = s)
        joint, Fp, Fm, ov = measure_evolution(m, ALPHA, BETA)
        rho = reduced_system_state(joint, m.apparatus_dim)
        assert abs(np.real(np.trace(rho)) - 1) < 1e-12
        assert abs(rho[0, 0] - abs(ALPHA) ** 2) < 1e-12
        assert abs(rho[1, 1] - abs(BETA) ** 2) < 1e-12
        assert abs(abs(rho[0, 1]) - abs(ALPHA) * abs(BETA) * abs(ov)) < 1e-12


def test_coefficients_must_be_normalized():
    m = orthogonal_pointer_model()
    with pytest.raises(NotNormalized):
        measure_evolution(m, 1, 1)


def test_model_validation():
    with pytest.raises(DimensionMismatch):
        MeasurementModel(np.eye(3), np.eye(3), [1, 0])
    with pytest.raises(DimensionMismatch):
        reduced_system_state(np.ones(3) / np.sqrt(3))


def test_identical_hamiltonians_keep_coherence():
    m = random_measurement_model(16, seed = 3, identical = True)
    _, _, _, ov = measure_evolution(m, ALPHA, BETA)
    assert abs(abs(ov) - 1) < 1e-12


def test_orthogonal_pointers():
    m = orthogonal_pointer_model()
    joint, Fp, Fm, ov = measure_evolution(m, ALPHA, BETA)
    assert abs(ov) < 1e-15
    rho = reduced_system_state(joint)
    assert_close(rho, np.diag([abs(ALPHA) ** 2, abs(BETA) ** 2]), 1e-14)


def test_overlap_scales_as_inverse_dimension():
    df = overlap_scaling_experiment([8, 32, 128], trials = 400, seed = 0)
    assert list(df["N"]) == [8, 32, 128]
    assert list(df["trials"]) == [400, 400, 400]
    m = df["mean_sq_overlap"].to_numpy()
    sem = df["sem"].to_numpy()
    # within 4 standard errors of 1/N; the GUE form factor bias at this
    # time is far below one standard error
    assert np.all(np.abs(m - df["inv_N"].to_numpy()) <= 4 * sem)
    assert m[0] > m[1] > m[2]


def test_overlap_control_stays_one():
    df = overlap_scaling_experiment([8, 32], trials = 20, seed = 0,
                                    identical = True)
    assert np.all(np.abs(df["mean_sq_overlap"] - 1) < 1e-10)


def test_overlap_workers_reproducible():
    df1 = overlap_scaling_experiment([4, 6], trials = 30, seed = 5)
    df2 = overlap_scaling_experiment([4, 6], trials = 30, seed = 5,
                                     workers = 2)
    assert df1.equals(df2)


def test_repeated_measurement_has_no_cross_sectors():
    for s in range(10):
        m1 = random_measurement_model(4, seed = 2 * s)
        m2 = random_measurement_model(5, seed = 2 * s + 1)
        assert repeated_measurement(m1, m2, ALPHA, BETA) < 1e-12


def test_repeated_outcomes_agree():
    m = orthogonal_pointer_model()
    P = repeated_outcome_distribution(m, m, ALPHA, BETA)
    assert_close(P, np.diag([abs(ALPHA) ** 2, abs(BETA) ** 2]), 1e-12)


def test_second_apparatus_leaves_first_marginal():
    m1 = random_measurement_model(3, seed = 1)
    m2 = random_measurement_model(4, seed = 2)
    psi, pointers = measurement_chain([m1, m2], ALPHA, BETA)
    joint, Fp, Fm, _ = measure_evolution(m1, ALPHA, BETA)
    single = apparatus_marginal(joint, [2, 3], 1)
    chained = apparatus_marginal(psi, [2, 3, 4], 1)
    assert_close(chained, single, 1e-12)
    expect = abs(ALPHA) ** 2 * ket2dm(Fp) + abs(BETA) ** 2 * ket2dm(Fm)
    assert_close(single, expect, 1e-12)


def test_short_time_slope():
    m = MeasurementModel(PAULI_Z, np.zeros((2, 2)), [1, 0])
    res = short_time_fit(m, np.linspace(1e-4, 1e-3, 10))
    assert abs(res["analytic_slope"] - 1) < 1e-12
    assert abs(res["slope"] - 1) < 1e-6
    assert res["rsquared"] > 0.999999


def test_decohere_core():
    conf = Config()
    res = decohere_core([4, 64], 200, 10.0, conf, short_time = True)
    assert res["strictly_decreasing"]
    assert res["table"].shape[0] == 2
    assert set(res["short_time"]) == {"slope", "bse", "rsquared",
                                      "analytic_slope"}
