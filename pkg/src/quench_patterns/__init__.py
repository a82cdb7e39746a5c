"""Patterns left behind by a moving quench in a cubic bistable medium.

The library computes the steady states selected when a parameter jump
travels at speed c through an Allen-Cahn equation: 1D invasion fronts,
periodic wake patterns on strips of height kappa, the single-interface
half-plane pattern, and the explicit sub/supersolutions that bracket
them.  Everything is organized around one number, the critical quantity
P(c; kappa) = c^2/4 + pi^2/kappa^2: below 1 the wake retains a pattern,
above 1 it is erased.
"""

from ._operators import iteration_stats
from .classify import (ClassificationRecord, critical_quantity,
                       fit_decay_rate, predict, sweep)
from .errors import (AccuracyError, ConvergenceError, DimensionError,
                     DomainTooShortError, InstabilityError, ParameterError,
                     QuenchError, SchemeIntegrityError)
from .evolve import EvolveConfig, comparison_preserved, default_dt, evolve
from .front1d import (DichotomyVerdict, IterationReport, continue_front,
                      solve_truncated_front, verify_dichotomy, wake_amplitude)
from .grids import (Field1D, Field2D, Grid1D, Grid2D, aligned_grid,
                    extend_front, extend_strip, mu_at, quench_mu)
from .orbits import (KAPPA_INF, PeriodicOrbit, amplitude_of_half_period,
                     complete_elliptic_K, half_period_of_amplitude,
                     hamiltonian, hamiltonian_level, sample_orbit)
from .strip2d import (StripProblem, SubsolutionSpec,
                      build_nonexistence_supersolution, build_subsolution,
                      continue_strip, make_strip_problem, odd_extension,
                      periodic_profile_discrete, solve_hinfty,
                      solve_truncated_strip, supersolution_shift, wake_slice)
from .waves import WaveProfile, bistable_wave, csch_supersolution, decay_rates

__version__ = "0.1.0"
