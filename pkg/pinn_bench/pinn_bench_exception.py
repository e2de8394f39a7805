# coding=utf-8
"""
Custom exception classes for pinn_bench
"""


class PinnBenchError(Exception):
    """
    Base exception of the package. Stores the offending value or message in ``value``.
    """
    def __init__(self, value):
        self.value = value

    def __str__(self):
        return repr(self.value)


class UnsupportedOrderError(PinnBenchError):
    pass


class SingularityError(PinnBenchError):
    pass


class NumericError(PinnBenchError):
    """
    Raised when a non-finite number shows up. ``location`` names the tape node or the
    training iteration where it was found.
    """
    def __init__(self, value, location: int | None = None):
        super().__init__(value)
        self.location = location


class ShapeError(PinnBenchError):
    pass


class DomainError(PinnBenchError):
    pass


class ConfigurationError(PinnBenchError):
    pass


class StabilityError(PinnBenchError):
    """
    Raised by explicit schemes whose step sizes break the stability bound.
    ``suggested_step`` is the largest time step that satisfies it.
    """
    def __init__(self, value, suggested_step: float | None = None):
        super().__init__(value)
        self.suggested_step = suggested_step


class SeriesTruncationError(PinnBenchError):
    pass


class TransformSingularityError(PinnBenchError):
    pass


class OutputExistsError(PinnBenchError):
    pass
