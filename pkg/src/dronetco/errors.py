"""Exception hierarchy shared across the package."""


class DroneTcoError(Exception):
    """Base class for all package-specific errors."""


class DomainError(DroneTcoError, ValueError):
    """A numeric argument is outside the mathematical domain of an operation
    (e.g. a drone count below 1, a non-positive horizon)."""


class ValidationError(DroneTcoError, ValueError):
    """A parameter set, profile, or scenario violates a model invariant.
    Messages name the offending field."""


class UnknownKeyError(ValidationError):
    """A scenario document contains a key the schema does not define."""


class ScenarioParseError(DroneTcoError, ValueError):
    """A scenario document is not well-formed JSON. Messages carry the
    line/column of the failure."""
