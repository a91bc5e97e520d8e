"""Exception types shared across the package."""


class CovertopError(Exception):
    """Base class for all package-specific errors."""


class ConfigurationError(CovertopError):
    """A network configuration violates a model invariant (e.g. eps > r_c)."""


class NodeNotFoundError(CovertopError):
    """An edit referenced a node id that does not exist."""


class ParseError(CovertopError):
    """Malformed CSV input."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class SchemaError(CovertopError):
    """A JSON document is missing a field or carries the wrong type."""

    def __init__(self, message: str, field: str):
        super().__init__(message)
        self.field = field
