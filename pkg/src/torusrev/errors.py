"""Exception types raised by the library."""


class TorusRevError(Exception):
    """Base class for domain errors."""


class NotUnimodular(TorusRevError, ValueError):
    pass


class NotAnInvolution(TorusRevError, ValueError):
    pass


class TrivialInvolution(TorusRevError, ValueError):
    """Raised when an operation needs an involution other than +I or -I."""


class InvalidParams(TorusRevError, ValueError):
    pass


class NoRecipe(TorusRevError, ValueError):
    pass


class PerfectSquare(TorusRevError, ValueError):
    pass


class NonPositive(TorusRevError, ValueError):
    pass


class OrientationMismatch(TorusRevError, ValueError):
    pass


class NotHyperbolic(TorusRevError, ValueError):
    def __init__(self, message, reason=None):
        super().__init__(message)
        self.reason = reason


class OrientationReversing(TorusRevError, ValueError):
    pass


class OrientationPreserving(TorusRevError, ValueError):
    pass


class NotReversible(TorusRevError, ValueError):
    pass
