"""Exception hierarchy shared by all solvers."""


class QuenchError(Exception):
    """Base class for all library errors."""


class ParameterError(QuenchError, ValueError):
    """A parameter violates a documented precondition."""


class DimensionError(QuenchError, ValueError):
    """Mismatched grids or array shapes."""


class ConvergenceError(QuenchError):
    """An iteration or continuation schedule failed to converge."""


class SchemeIntegrityError(QuenchError):
    """The monotone iteration produced an increasing iterate; signals a
    discretization bug rather than a hard problem instance."""


class AccuracyError(QuenchError):
    """A computed quantity failed its built-in accuracy monitor."""


class InstabilityError(QuenchError):
    """A time integration blew up."""


class DomainTooShortError(QuenchError):
    """A shooting trajectory left the admissible region before the
    requested domain was covered."""
