# test_bell.py - tests of CHSH values and correlation boxes.


import numpy as np
import pytest

from ..bell.box import STRATEGIES, CorrelationBox, box_chsh, \
    chsh_variants, deterministic_box, is_nonsignaling, local_membership, \
    pr_box, quantum_box
from ..bell.chsh import TSIRELSON, MeasurementDirections, \
    canonical_directions, chsh_value, classical_max, correlation_matrix, \
    horodecki_bound, maximize_chsh, random_directions
from ..bell.main import box_core
from ..linalg.core import tensor
from ..linalg.rand import random_density
from ..linalg.states import named_state, werner
from ..utils.errors import DimensionMismatch, MalformedTable, \
    NotNonSignaling, NotNormalized


def singlet():
    return named_state("singlet")[0]


### CHSH

def test_canonical_singlet_reaches_tsirelson():
    v = chsh_value(singlet(), canonical_directions())
    assert abs(v - 2 * np.sqrt(2)) < 1e-9


def test_singlet_correlation_matrix():
    assert np.allclose(correlation_matrix(singlet()), -np.eye(3), atol = 1e-12)
    assert abs(horodecki_bound(singlet()) - TSIRELSON) < 1e-12


def test_werner_scales_linearly():
    for p in (0.0, 0.3, 1 / np.sqrt(2), 1.0):
        v = chsh_value(werner(p), canonical_directions())
        assert abs(v - p * TSIRELSON) < 1e-9


def test_maximize_reaches_tsirelson():
    d, v = maximize_chsh(singlet(), seed = 0, restarts = 8)
    assert v >= TSIRELSON - 1e-8
    assert v <= TSIRELSON + 1e-9
    assert abs(chsh_value(singlet(), d) - v) < 1e-9


def test_maximize_matches_horodecki():
    for s in range(3):
        rho = random_density(4, seed = s)
        _, v = maximize_chsh(rho, seed = s, restarts = 8)
        assert v <= horodecki_bound(rho) + 1e-9
        assert v >= horodecki_bound(rho) - 1e-4


def test_product_states_respect_classical_bound():
    for s in range(200):
        rho = tensor(random_density(2, seed = 2 * s),
                     random_density(2, seed = 2 * s + 1))
        assert horodecki_bound(rho) <= 2 + 1e-9
        assert chsh_value(rho, random_directions(s)) <= 2 + 1e-9


def test_classical_max():
    res = classical_max()
    assert res["max"] == 2
    assert len(res["values"]) == 16
    assert all(res["values"][s] == 2 for s in res["strategies"])


def test_direction_validation():
    z = [0, 0, 1]
    with pytest.raises(NotNormalized):
        MeasurementDirections([1, 1, 0], z, z, z)
    d = canonical_directions()
    assert MeasurementDirections.from_dict(d.to_dict()).to_dict() == d.to_dict()


def test_chsh_needs_two_qubits():
    with pytest.raises(DimensionMismatch):
        chsh_value(np.eye(2) / 2, canonical_directions())


### Boxes

def test_pr_box():
    box = pr_box()
    ok, v = is_nonsignaling(box)
    assert ok and v == 0
    assert abs(box_chsh(box) - 4) < 1e-12
    local, cert = local_membership(box)
    assert not local
    assert cert["value"] > 2
    res = box_core(box)
    assert res["violation"]


def test_deterministic_boxes_are_local():
    for s in STRATEGIES:
        box = deterministic_box(s)
        assert abs(box_chsh(box)) <= 2
        local, cert = local_membership(box)
        assert local
        assert cert["reconstruction_error"] < 1e-9


def test_mixture_of_strategies_is_local():
    P = sum(deterministic_box(s).table for s in STRATEGIES) / 16
    local, cert = local_membership(CorrelationBox(P))
    assert local
    assert abs(sum(cert["weights"].values()) - 1) < 1e-9
    assert max(chsh_variants(CorrelationBox(P)).values()) <= 2


def test_quantum_box_matches_operator_value():
    d = canonical_directions()
    box = quantum_box(singlet(), d)
    assert is_nonsignaling(box)[0]
    assert abs(box_chsh(box) - chsh_value(singlet(), d)) < 1e-12
    res = box_core(box)
    assert res["local"] is False
    for s in range(20):
        rho = random_density(4, seed = s)
        d = random_directions(s)
        box = quantum_box(rho, d)
        assert abs(box_chsh(box) - chsh_value(rho, d)) < 1e-12


def test_signaling_box():
    P = np.zeros((2, 2, 2, 2))
    P[0, 0, 0, 0] = 1
    P[0, 1, 1, 0] = 1
    P[1, 0, 0, 0] = 1
    P[1, 1, 0, 0] = 1
    box = CorrelationBox(P)
    ok, v = is_nonsignaling(box)
    assert not ok and abs(v - 1) < 1e-12
    with pytest.raises(NotNonSignaling):
        local_membership(box)
    assert box_core(box)["violation"]


def test_malformed_tables():
    with pytest.raises(MalformedTable):
        CorrelationBox(np.ones((2, 2, 2)))
    P = pr_box().table.copy()
    P[0, 0, 0, 0] = -0.1
    P[0, 0, 0, 1] += 0.1
    with pytest.raises(MalformedTable):
        CorrelationBox(P)
    with pytest.raises(MalformedTable):
        CorrelationBox(np.ones((2, 2, 2, 2)) / 3)
