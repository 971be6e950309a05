"""Exception hierarchy shared by all curved_maxwell modules."""


class CurvedMaxwellError(Exception):
    """Base class for all library errors."""


class WaveEquationViolated(CurvedMaxwellError):
    """Scalar seed does not satisfy the flat wave equation to tolerance."""


class OutOfRange(CurvedMaxwellError):
    """Coordinate outside the chart of the requested geometry."""


class SingularPoint(CurvedMaxwellError):
    """Evaluation requested within the guard band of a coordinate singularity."""


class ZeroFrequency(CurvedMaxwellError):
    """omega = 0 leaves the algebraic f1 relation undefined."""


class InvalidQuantumNumbers(CurvedMaxwellError):
    """Quantum numbers outside the domain of the requested constructor."""


class InvalidBranch(CurvedMaxwellError):
    """Unknown solution-family branch name."""


class DegenerateElimination(CurvedMaxwellError):
    """A decoupling divisor vanished; use a special-family constructor or
    direct integration instead."""


class SeriesDiverged(CurvedMaxwellError):
    """Hypergeometric series argument outside the convergence disc."""


class ParameterPole(CurvedMaxwellError):
    """Hypergeometric c-parameter hit a nonpositive integer."""


class StepLimitExceeded(CurvedMaxwellError):
    """ODE integrator exhausted its step budget."""


class SingularityApproached(CurvedMaxwellError):
    """ODE integration ran into a chart singularity."""


class NoBracket(CurvedMaxwellError):
    """Eigenvalue scan found no sign change in the requested range."""
