"""Base exception classes for GAFSV."""


class GafsvError(Exception):
    """Base class for all user-facing GAFSV errors.

    Every subclass carries the process exit code the command-line interface
    reports when the error escapes a command.
    """

    exit_code: int = 1


class ConfigError(GafsvError):
    """Base class for user-facing configuration errors.

    All configuration-related exceptions inherit from this class to ensure
    consistent error handling and user messaging throughout the application.
    """

    exit_code = 1


class DataError(GafsvError):
    """Base class for errors caused by input data (files, datasets, formats)."""

    exit_code = 2


class NumericError(GafsvError):
    """Base class for numeric failures (non-finite values, failed gradient checks)."""

    exit_code = 3
