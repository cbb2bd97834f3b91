"""Exception types shared across the package."""


class SumGraphError(Exception):
    """Base class for all package errors."""


class ValidationError(SumGraphError, ValueError):
    """Input violates a documented precondition."""


class UnsupportedParameterError(ValidationError):
    """Parameters are well-formed but outside the range a construction covers."""


class CapacityError(SumGraphError):
    """A brute-force routine was asked to exceed its order cap."""


class ConstructionError(SumGraphError):
    """A constructive procedure produced something that fails its own check."""


class ParseError(SumGraphError, ValueError):
    def __init__(self, message: str, position):
        super().__init__(f"{message} (at {position})")
        self.position = position
