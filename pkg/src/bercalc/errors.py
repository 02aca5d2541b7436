"""Exception hierarchy shared by every bercalc module."""


class BercalcError(Exception):
    """Base class for all errors raised by bercalc."""


class DimensionError(BercalcError, ValueError):
    """Operands have incompatible shapes."""


class SingularityError(BercalcError, ArithmeticError):
    """A closed-form expression hits a vanishing denominator."""


class SingularMatrixError(SingularityError):
    """A matrix that must be invertible is (numerically) singular."""


class ContractError(BercalcError, ValueError):
    """An input violates a documented precondition (e.g. non-Hermitian)."""


class ConvergenceError(BercalcError, ArithmeticError):
    """An iterative method stopped before reaching its tolerance."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DomainError(BercalcError, ValueError):
    """A point or parameter lies outside the admissible domain."""


class InputError(BercalcError, ValueError):
    """Malformed input data (descriptors, files, point sets)."""
