"""Unit tests for the existence classification layer."""

import math

import numpy as np
import pytest

import quench_patterns as qp


def test_critical_quantity_exact_values():
    assert qp.critical_quantity(0.0, qp.KAPPA_INF) == 0.0
    assert qp.critical_quantity(2.0, qp.KAPPA_INF) == 1.0
    assert qp.critical_quantity(math.sqrt(3.0), 2 * math.pi) == \
        pytest.approx(1.0, rel=1e-15)
    assert qp.critical_quantity(1.0, 2 * math.pi) == pytest.approx(0.5)


def test_critical_quantity_validation():
    with pytest.raises(qp.ParameterError):
        qp.critical_quantity(-1.0, 2 * math.pi)
    with pytest.raises(qp.ParameterError):
        qp.critical_quantity(1.0, 3.0)


def test_critical_quantity_monotonicity():
    kappas = np.linspace(3.5, 30.0, 20)
    p_k = [qp.critical_quantity(1.0, k) for k in kappas]
    assert np.all(np.diff(p_k) < 0)
    cs = np.linspace(0.0, 2.5, 20)
    p_c = [qp.critical_quantity(c, 8.0) for c in cs]
    assert np.all(np.diff(p_c) > 0)


def test_predict():
    assert qp.predict(1.0, 2 * math.pi) == "exists"
    assert qp.predict(2.1, qp.KAPPA_INF) == "not_exists"
    assert qp.predict(2.0, qp.KAPPA_INF) == "critical"
    assert qp.predict(math.sqrt(3.0), 2 * math.pi) == "critical"


def test_fit_decay_rate_synthetic():
    grid = qp.aligned_grid(0.0, 10.0, 0.05)
    x = grid.centers()
    fld = qp.Field1D(grid, 0.3 * np.exp(-2.0 * x))
    rate = qp.fit_decay_rate(fld, (2.0, 8.0), "value_to_zero")
    assert rate == pytest.approx(2.0, abs=1e-10)
    # prefactors shift the intercept, not the rate
    fld2 = qp.Field1D(grid, 0.05 * np.exp(-2.0 * x))
    assert qp.fit_decay_rate(fld2, (2.0, 8.0), "value_to_zero") == \
        pytest.approx(rate, abs=1e-10)


def test_fit_decay_rate_to_one():
    grid = qp.aligned_grid(-10.0, 0.0, 0.05)
    x = grid.centers()
    fld = qp.Field1D(grid, 1.0 - 0.2 * np.exp(1.5 * x))
    rate = qp.fit_decay_rate(fld, (-8.0, -2.0), "value_to_one")
    assert rate == pytest.approx(1.5, abs=1e-10)


def test_fit_decay_rate_validation():
    grid = qp.aligned_grid(0.0, 10.0, 0.05)
    fld = qp.Field1D(grid, np.exp(-grid.centers()))
    with pytest.raises(qp.ParameterError):
        qp.fit_decay_rate(fld, (2.0, 8.0), "value_to_half")
    flat = qp.Field1D(grid, np.zeros(grid.n_cells))
    with pytest.raises(qp.ParameterError):
        qp.fit_decay_rate(flat, (2.0, 8.0), "value_to_zero")


def test_record_agree():
    rec = qp.ClassificationRecord(1.0, 8.0, 0.4, "exists", "nontrivial")
    assert rec.agree is True
    rec = qp.ClassificationRecord(1.0, 8.0, 0.4, "exists", "trivial")
    assert rec.agree is False
    rec = qp.ClassificationRecord(1.0, 8.0, 0.4, "exists")
    assert rec.agree is None
    rec = qp.ClassificationRecord(2.0, qp.KAPPA_INF, 1.0, "critical",
                                  "trivial")
    assert rec.agree is None
    rec = qp.ClassificationRecord(1.0, 8.0, 0.4, "exists", "inconclusive")
    assert rec.agree is None


def test_sweep_predicted_only():
    records = qp.sweep([0.5, 2.1], [4.0, qp.KAPPA_INF])
    assert len(records) == 4
    # row-major: c outer, kappa inner
    assert [(r.c, r.kappa) for r in records] == \
        [(0.5, 4.0), (0.5, qp.KAPPA_INF), (2.1, 4.0), (2.1, qp.KAPPA_INF)]
    assert all(r.measured == "not_run" for r in records)
    assert all(math.isnan(r.wake_amplitude) for r in records)
    assert records[0].predicted == "exists"
    assert records[3].predicted == "not_exists"


def test_sweep_range_validation():
    with pytest.raises(qp.ParameterError):
        qp.sweep([3.5], [8.0])
    with pytest.raises(qp.ParameterError):
        qp.sweep([1.0], [2.0])
    with pytest.raises(qp.ParameterError):
        qp.sweep([1.0], [100.0])
