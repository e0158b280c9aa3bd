"""YAML configuration source for GAFSV."""

from pathlib import Path
from typing import Any

import yaml

from src.exceptions import ConfigFileError


class YAMLConfigSource:
    """Load configuration from flat YAML mappings.

    Implements the ConfigSource protocol for YAML file loading. Keys are the
    same flat keys accepted by `key = value` files; values may be scalars or
    lists (``branch_channels: [8, 16, 32]``).

    Attributes:
        config_path: Path to the YAML configuration file
    """

    def __init__(self, config_path: Path) -> None:
        """Initialize the YAML config source.

        Args:
            config_path: Path to the YAML configuration file

        Raises:
            ConfigFileError: If the file does not exist
        """
        self._config_path = config_path
        if not config_path.exists():
            raise ConfigFileError(f"Configuration file not found: {config_path}")
        if not config_path.is_file():
            raise ConfigFileError(f"Configuration path is not a file: {config_path}")

    @property
    def source_description(self) -> str:
        """Human-readable description of the config source."""
        return f"YAML file: {self._config_path}"

    def load(self) -> dict[str, Any]:
        """Load and parse the YAML configuration file.

        Returns:
            Flat mapping of config keys to values

        Raises:
            ConfigFileError: If YAML parsing fails or the document is not a flat mapping
        """
        try:
            with open(self._config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            error_msg = f"Failed to parse YAML configuration: {e}"
            if hasattr(e, "problem_mark") and e.problem_mark is not None:
                mark = e.problem_mark
                error_msg += f" (line {mark.line + 1}, column {mark.column + 1})"
            raise ConfigFileError(error_msg) from e

        if data is None:
            return {}

        if not isinstance(data, dict):
            raise ConfigFileError(
                f"Configuration must be a YAML mapping, got {type(data).__name__}"
            )

        for key, value in data.items():
            if isinstance(value, dict):
                raise ConfigFileError(f"'{key}' must be a scalar or list; nested sections are not supported")
        return {str(key): value for key, value in data.items()}
