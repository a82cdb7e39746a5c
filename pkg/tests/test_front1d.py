"""Unit tests for the 1D quenched-front solver."""

import numpy as np
import pytest

import quench_patterns as qp


def test_report_converged(front_c1):
    assert front_c1.final_update < 1e-10
    assert front_c1.final_residual < 1e-8
    assert front_c1.monotone_violation <= 1e-12
    assert front_c1.iterations > 1


def test_front_range_and_shape(front_c1):
    u = front_c1.field.values
    assert np.all(u >= -1e-12)
    assert np.all(u <= 1.0 + 1e-12)
    # decreasing left to right: 1 behind the trigger, 0 far ahead
    assert np.all(np.diff(u) <= 1e-12)
    x = front_c1.field.grid.centers()
    assert u[x < -10].min() > 0.99
    assert u[x > 20].max() < 1e-6


def test_interface_value_symmetric_speed():
    # at c = 0 the problem is antisymmetric about the trigger up to the
    # affine map u -> 1 - u, so the interface value is 1/2
    rep = qp.solve_truncated_front(0.0, 20.0, 20.0, 0.02, 1e-10)
    mid = qp.extend_front(rep.field, 1.0, 0.0)(np.array([0.0]))[0]
    assert mid == pytest.approx(0.5, abs=1e-4)


def test_larger_domain_smaller_solution():
    # the maximal solution decreases as the truncated domain grows, up to
    # the exponentially small leakage from the receding right boundary
    a = qp.solve_truncated_front(1.0, 10.0, 10.0, 0.05, 1e-10).field
    b = qp.solve_truncated_front(1.0, 20.0, 20.0, 0.05, 1e-10).field
    probes = np.linspace(-8.0, 8.0, 101)
    ua = qp.extend_front(a, 1.0, 0.0)(probes)
    ub = qp.extend_front(b, 1.0, 0.0)(probes)
    assert np.all(ub <= ua + 1e-8)


def test_wake_amplitude_probe_band(front_c1):
    amp = qp.wake_amplitude(front_c1.field)
    assert amp == pytest.approx(1.0, abs=1e-3)
    with pytest.raises(qp.ParameterError):
        qp.wake_amplitude(front_c1.field, near=50.0, far=60.0)


def test_l_zero_special_case():
    rep = qp.solve_truncated_front(1.0, 20.0, 0.0, 0.02, 1e-10)
    g = rep.field.grid
    assert g.x_max == 0.0
    assert np.all(rep.field.values >= 0.0)
    # vanishes at the trigger, saturates toward 1 deep inside
    assert rep.field.values[-1] < 0.01
    assert rep.field.values[g.centers() < -10].min() > 0.99


def test_parameter_validation():
    with pytest.raises(qp.ParameterError):
        qp.solve_truncated_front(1.0, -5.0, 10.0)
    with pytest.raises(qp.ParameterError):
        qp.solve_truncated_front(1.0, 10.0, -1.0)
    with pytest.raises(qp.ParameterError):
        # cell Peclet number at or above 1 breaks the ordered stencil
        qp.solve_truncated_front(2.0, 10.0, 10.0, h=1.5)


def test_convergence_error_on_tiny_budget():
    with pytest.raises(qp.ConvergenceError):
        qp.solve_truncated_front(1.0, 10.0, 10.0, 0.05, 1e-10, max_iter=3)


def test_continue_front_stabilizes():
    rep = qp.continue_front(1.0, h=0.05, tol=1e-8, window=(-10.0, 10.0),
                            domain_tol=1e-6, M0=15.0, L0=15.0)
    g = rep.field.grid
    assert -g.x_min >= 30.0 and g.x_max >= 15.0
    assert qp.wake_amplitude(rep.field) > 0.99


def test_dichotomy_nontrivial_fast():
    v = qp.verify_dichotomy(1.0, h=0.05, tol=1e-8, domain_tol=1e-5)
    assert v.verdict == "nontrivial"
    assert v.wake_amplitude > 0.99
    assert v.M_final >= 200.0


def test_dichotomy_trivial_fast():
    v = qp.verify_dichotomy(2.5, h=0.05, tol=1e-8, domain_tol=1e-5)
    assert v.verdict == "trivial"
    assert v.wake_amplitude <= 1e-3


def test_dichotomy_critical_band_is_inconclusive():
    v = qp.verify_dichotomy(1.96, h=0.05)
    assert v.verdict == "inconclusive"
