"""Configuration-related exceptions for GAFSV."""

from pydantic import ValidationError

from src.exceptions.base import ConfigError


class ConfigValidationError(ConfigError):
    """Raised when Pydantic validation fails for user-provided settings.

    This exception is raised when configuration values from a file, the
    command line or a checkpoint config block fail validation due to
    incorrect types, unknown keys or constraint violations defined in the
    Pydantic models.
    """

    def __init__(self, message: str, *, errors: ValidationError | None = None) -> None:
        super().__init__(message)
        self.errors = errors


class UnknownConfigKeyError(ConfigValidationError):
    """Raised when a config file names a key outside the flat key vocabulary."""

    def __init__(self, key: str, source: str) -> None:
        super().__init__(f"Unknown configuration key '{key}' in {source}.")
        self.key = key
        self.source = source


class ConfigFileError(ConfigValidationError):
    """Exception raised for configuration file errors.

    This includes:
    - File not found
    - Lines that are not `key = value` pairs
    - YAML parsing errors or non-mapping YAML documents
    """
