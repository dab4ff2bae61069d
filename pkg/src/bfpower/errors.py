"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain where the model is defined."""


class ConfigError(ValueError):
    """A configuration document could not be parsed or validated."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class UnitError(ConfigError):
    """A quantity carried a missing, unknown or mismatched unit."""
