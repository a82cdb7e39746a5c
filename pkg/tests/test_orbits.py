import math

import numpy as np
import pytest

import quench_patterns as qp

# frozen quadrature oracles (independent substitution-rule integration)
K_HALF = 1.6857503548125963
K_1_SQRT7 = 1.6319067960784377
KAPPA_HALF = 3.4891634960419906
AMP_2PI = 0.9515587836914648


def test_elliptic_K_oracles():
    assert qp.complete_elliptic_K(0.5) == pytest.approx(K_HALF, abs=1e-12)
    assert qp.complete_elliptic_K(1 / math.sqrt(7)) == pytest.approx(
        K_1_SQRT7, abs=1e-12)
    assert qp.complete_elliptic_K(0.0) == pytest.approx(math.pi / 2, abs=1e-15)


def test_elliptic_K_domain():
    with pytest.raises(qp.ParameterError):
        qp.complete_elliptic_K(1.0)
    with pytest.raises(qp.ParameterError):
        qp.complete_elliptic_K(-0.1)


def test_half_period_oracles():
    assert qp.half_period_of_amplitude(0.5) == pytest.approx(
        KAPPA_HALF, abs=1e-12)
    # small orbits approach the linear half-period pi
    assert qp.half_period_of_amplitude(1e-3) - math.pi < 1.2e-6
    # the period diverges as the amplitude approaches 1
    assert qp.half_period_of_amplitude(1 - 1e-9) > 10.0


def test_amplitude_inverse_roundtrip():
    for M in np.arange(0.1, 0.95, 0.1):
        kappa = qp.half_period_of_amplitude(M)
        assert abs(qp.amplitude_of_half_period(kappa) - M) <= 1e-9


def test_amplitude_limits():
    assert qp.amplitude_of_half_period(2 * math.pi) == pytest.approx(
        AMP_2PI, abs=1e-9)
    assert qp.amplitude_of_half_period(math.pi + 1e-6) < 0.01
    with pytest.raises(qp.ParameterError):
        qp.amplitude_of_half_period(3.0)


def test_hamiltonian_level():
    for M in (0.3, 0.7, 0.95):
        assert qp.hamiltonian(M, 0.0) == pytest.approx(
            qp.hamiltonian_level(M), abs=1e-15)
    assert qp.hamiltonian_level(1.0) == pytest.approx(0.5)


def test_sample_orbit_basic():
    orbit = qp.sample_orbit(2 * math.pi, 127)
    assert orbit.amplitude == pytest.approx(AMP_2PI, abs=1e-9)
    # odd cell count puts the turning point on a center
    assert orbit.profile.values.max() == pytest.approx(orbit.amplitude,
                                                       abs=1e-9)
    assert orbit.profile.values[0] > 0
    assert orbit.drift <= 1e-8
    # end of the half-period returns to the axis
    assert abs(orbit.evaluate(2 * math.pi)) < 1e-9


def test_sample_orbit_infinite():
    orbit = qp.sample_orbit(qp.KAPPA_INF, 100)
    assert orbit.amplitude == 1.0
    y = np.linspace(0, 10, 50)
    assert np.allclose(orbit.evaluate(y), np.tanh(y / math.sqrt(2)))


def test_spline_matches_nodes():
    orbit = qp.sample_orbit(5.0, 101)
    c = orbit.profile.grid.centers()
    assert np.max(np.abs(orbit.evaluate(c) - orbit.profile.values)) < 1e-12


def test_verified_amplitude_bound_direction():
    # quadrature confirms M(kappa)^2 > 1 - pi^2/kappa^2 across the family
    for M in np.arange(0.1, 0.95, 0.1):
        kappa = qp.half_period_of_amplitude(M)
        assert M * M > 1.0 - math.pi ** 2 / kappa ** 2
