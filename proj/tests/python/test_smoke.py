import math

import numpy as np
import pytest

import rindler_probe as rp


def test_planck_forms_agree():
    for w in (0.01, 0.5, 2.0, 7.0):
        assert rp.rindler_wigner(1.0, 1.0, w) == pytest.approx(rp.rindler_wigner_planck(1.0, 1.0, w), rel=1e-12)


def test_psi_matches_reference():
    value, case, delta = rp.psi_closed(0.4, 0.0, -0.6, -1.1)
    assert case == 2 and not delta
    assert value == pytest.approx(-1.9715266073088209, rel=1e-10)
    real, imag, _ = rp.psi_quadrature(0.4, 0.0, -0.6, -1.1)
    assert real == pytest.approx(value, rel=1e-8)
    assert abs(imag) < 1e-9


def test_correction_and_delta():
    value, delta = rp.correction_R(0.6, 0.8, 0.0, 0.7)
    assert not delta
    assert value == pytest.approx(0.0093093963134637703, rel=1e-9)
    assert rp.correction_R(0.0, 0.0, 0.0, 1.0) == (0.0, True)


def test_mirror_wigner_is_deformed_planck():
    W0 = rp.rindler_wigner(1.0, 1.0, 1.3)
    R, _ = rp.correction_R(0.8, 0.3, 0.5, 1.3)
    assert rp.mirror_wigner(1.0, 0.3, 0.8, 1.0, 0.5, 1.3) == pytest.approx(W0 * (1 - R), rel=1e-12)


def test_localization_round_trip():
    eta = np.linspace(-2, 2, 9)
    nu = np.linspace(0.3, 3, 12)
    R = rp.correction_grid(0.7, 1.2, eta, nu)
    assert R.shape == (9, 12)
    fit = rp.fit_scene(R, eta, nu)
    assert abs(abs(fit["alpha"]) - 0.7) < 1e-3
    assert abs(fit["alpha0"] - 1.2) < 1e-3


def test_stationary_distance():
    omega = np.linspace(0.2, 6, 40)
    W = np.array([rp.stationary_mirror_spectrum(0.8, 1.0, w) for w in omega])
    d, _, at_boundary = rp.fit_distance_stationary(omega, W)
    assert d == pytest.approx(0.8, rel=1e-6)
    assert not at_boundary


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        rp.psi_closed(0.5, -0.1, 0.0, -1.0)
    with pytest.raises(rp.RindlerError):
        rp.psi_closed(0.5, 0.0, 0.0, 0.0)


def test_small_simulation_is_reproducible():
    args = (1.0, 0.2, np.array([0.0]), np.linspace(0, 2, 41), np.array([0.5, 1.0]), 4)
    a_mean, a_se = rp.simulate_rindler(*args, waves=64, seed=3)
    b_mean, _ = rp.simulate_rindler(*args, waves=64, seed=3)
    assert np.array_equal(a_mean, b_mean)
    assert a_mean.shape == (1, 2)
    assert np.all(a_se > 0)


def test_fast_suite():
    assert "rovelli" in rp.suite_names()
    results = rp.run_suite("rovelli")
    assert len(results) == 1 and results[0]["passed"]
    assert math.isfinite(results[0]["measured"])
