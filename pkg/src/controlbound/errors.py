"""Exception types shared across the package."""


class ControlBoundError(Exception):
    pass


class NotHermitian(ControlBoundError, ValueError):
    pass


class DimensionTooLarge(ControlBoundError, ValueError):
    pass


class DimensionMismatch(ControlBoundError, ValueError):
    pass


class InvalidHorizon(ControlBoundError, ValueError):
    pass


class NotConverged(ControlBoundError, RuntimeError):
    pass


class UnknownScenario(ControlBoundError, ValueError):
    pass


class InvalidBudget(ControlBoundError, ValueError):
    pass


class ConfigParseError(ControlBoundError):
    """Malformed config document. ``where`` names the line or field at fault."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class ValidationError(ControlBoundError):
    """Config parsed but describes an inconsistent system."""
