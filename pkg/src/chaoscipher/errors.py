"""Exception types shared across the package."""


class ChaosCipherError(Exception):
    """Base class for every error raised by chaoscipher."""


class DomainError(ChaosCipherError, ValueError):
    """A numeric input lies outside the domain of an operation."""


class KeyOutOfRange(DomainError):
    """A key does not quantize into the admissible key space."""


class ArgumentError(ChaosCipherError, ValueError):
    """Structurally invalid arguments (length mismatch, bad index, ...)."""


class ConfigError(DomainError):
    """A configuration file could not be parsed or failed validation."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
