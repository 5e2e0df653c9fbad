"""Exception types shared across the package."""


class SupaddError(Exception):
    """Base class for all package errors."""


class InvalidInput(SupaddError, ValueError):
    """Argument outside the documented domain (shape, range, finiteness)."""


class NotPSD(SupaddError):
    """Matrix has an eigenvalue below the allowed clamp tolerance."""


class LinearDependence(SupaddError):
    """States (or Gram matrix) are numerically linearly dependent."""


class ResourceLimit(SupaddError):
    """Requested dimension exceeds the configured memory guard."""


class NoRoot(SupaddError):
    """A bracketing search found no sign change on the scanned interval."""


class Unconverged(SupaddError):
    """Iteration hit its sweep limit before meeting the residual tolerance.

    Carries the best iterate found so far: `measurement` and `report`
    attributes are set when raised by the pairwise-rotation optimizer.
    """

    def __init__(self, message, measurement=None, report=None):
        super().__init__(message)
        self.measurement = measurement
        self.report = report
