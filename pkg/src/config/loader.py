"""Configuration loader for GAFSV training runs."""

import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from src.config.flat import FLAT_KEYS, flatten, nest
from src.config.models import TrainConfig
from src.config.protocols import ConfigSource
from src.config.resolver import ConfigResolver
from src.exceptions import ConfigValidationError, UnknownConfigKeyError

logger = logging.getLogger(__name__)


class ConfigLoader:
    """Merge defaults, a config source and command-line overrides into a TrainConfig.

    Precedence is defaults < file values < overrides; overrides should only
    contain flags the user actually typed.

    Attributes:
        _file_values: Flat values read from the config source
        _overrides: Flat values given on the command line
        _source_description: Where the file values came from
    """

    def __init__(
        self,
        file_values: Mapping[str, Any] | None = None,
        *,
        overrides: Mapping[str, Any] | None = None,
        source_description: str = "built-in defaults",
    ) -> None:
        self._file_values = dict(file_values or {})
        self._overrides = dict(overrides or {})
        self._source_description = source_description

    @classmethod
    def from_source(
        cls,
        source: ConfigSource,
        *,
        overrides: Mapping[str, Any] | None = None,
    ) -> "ConfigLoader":
        """Create a ConfigLoader from any ConfigSource implementation."""
        return cls(
            source.load(),
            overrides=overrides,
            source_description=source.source_description,
        )

    @classmethod
    def from_path(
        cls,
        config_path: Path | None,
        *,
        overrides: Mapping[str, Any] | None = None,
    ) -> "ConfigLoader":
        """Resolve ``config_path`` (or a working-directory default) and load it."""
        resolved = ConfigResolver(explicit_path=config_path).resolve()
        if resolved is None:
            return cls(overrides=overrides)
        logger.debug(f"Using configuration file {resolved}")
        return cls.from_source(ConfigResolver.source_for(resolved), overrides=overrides)

    @property
    def source_description(self) -> str:
        return self._source_description

    def load(self) -> TrainConfig:
        """Return the validated training configuration.

        Raises:
            UnknownConfigKeyError: If the file or overrides use an unknown key
            ConfigValidationError: If a value violates the model constraints
        """
        for key in self._file_values:
            if key not in FLAT_KEYS:
                raise UnknownConfigKeyError(key, self._source_description)
        for key in self._overrides:
            if key not in FLAT_KEYS:
                raise UnknownConfigKeyError(key, "command-line flags")

        merged: dict[str, Any] = dict(flatten(TrainConfig()))
        merged.update(self._file_values)
        merged.update(self._overrides)
        try:
            return TrainConfig.model_validate(nest(merged))
        except ValidationError as e:
            raise ConfigValidationError(f"Invalid configuration ({self._source_description}): {e}", errors=e) from e
