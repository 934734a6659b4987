"""Exception hierarchy shared by all polarlp modules."""


class PolarLPError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(PolarLPError, ValueError):
    """Operands have incompatible dimensions."""


class ZeroDirection(PolarLPError, ValueError):
    """A direction vector that must be nonzero was zero."""


class IndeterminateForm(PolarLPError, ArithmeticError):
    """An extended-rational expression evaluated to inf - inf or 0 * inf."""


class EmptyPolyhedron(PolarLPError):
    """An operation defined only for nonempty sets received an empty one."""


class OriginNotContained(PolarLPError):
    """The polyhedron does not contain the origin (some offset is negative)."""


class InfeasiblePoint(PolarLPError):
    """A point claimed feasible violates a constraint.

    `index` is the 0-based row (or coordinate, for equality systems) that is
    violated; `system` names which constraint family it belongs to.
    """

    def __init__(self, message, index=None, system=None):
        super().__init__(message)
        self.index = index
        self.system = system


class RowLimitExceeded(PolarLPError):
    """Fourier-Motzkin elimination grew past the configured row budget."""


class Inconsistency(PolarLPError):
    """Two exact computations that must agree did not; signals a solver bug."""


class ParseError(PolarLPError, ValueError):
    """A text input was malformed. `line` is the 1-based source line."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
