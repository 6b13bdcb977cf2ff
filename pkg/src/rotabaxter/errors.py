"""Exceptions raised when an input violates a precondition."""


class RotaBaxterError(ValueError):
    """Base class; carries an optional :class:`~rotabaxter.report.CheckReport`."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DimensionMismatch(RotaBaxterError):
    pass


class InvalidLieAlgebra(RotaBaxterError):
    pass


class InvalidRepresentation(RotaBaxterError):
    pass


class NotRotaBaxter(RotaBaxterError):
    pass


class NotQuadratic(RotaBaxterError):
    pass


class ZeroWeight(RotaBaxterError):
    pass


class NotQuasitriangular(RotaBaxterError):
    pass


class NotFactorizable(RotaBaxterError):
    pass


class NotBialgebra(RotaBaxterError):
    pass


class NotMatchedPair(RotaBaxterError):
    pass


class NotManinTriple(RotaBaxterError):
    pass


class InternalInconsistency(RuntimeError):
    """Two routes that must agree did not; indicates a bug, not bad input."""
