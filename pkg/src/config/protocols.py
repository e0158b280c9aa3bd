"""Protocol definitions for configuration sources."""

from typing import Any, Protocol, runtime_checkable


@runtime_checkable
class ConfigSource(Protocol):
    """Protocol for configuration data sources.

    This protocol defines the interface that all configuration sources
    must implement. The ConfigLoader depends on this abstraction rather
    than concrete implementations.

    Implementations include:
    - KeyValueConfigSource: flat `key = value` text files
    - YAMLConfigSource: flat YAML mappings using the same keys
    """

    def load(self) -> dict[str, Any]:
        """Load flat configuration values from the source.

        Returns:
            Mapping of flat config keys to raw (unvalidated) values

        Raises:
            ConfigFileError: If the source cannot be read or parsed
        """
        ...

    @property
    def source_description(self) -> str:
        """Human-readable description of the config source.

        Returns:
            Description string for logging/error messages
            e.g., "config file: /path/to/gafsv.conf"
        """
        ...
