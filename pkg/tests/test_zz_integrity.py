"""Runs last (alphabetically): the monotone-iteration integrity check
over every solve performed by the whole suite."""

import quench_patterns as qp


def test_monotone_integrity_suite_wide():
    assert qp.iteration_stats.solves > 0
    assert qp.iteration_stats.max_monotone_violation <= 1e-12
