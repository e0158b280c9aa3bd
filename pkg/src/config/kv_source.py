"""Flat `key = value` configuration source for GAFSV."""

from pathlib import Path
from typing import Any

from src.exceptions import ConfigFileError


class KeyValueConfigSource:
    """Load configuration from flat UTF-8 `key = value` files.

    Blank lines and lines starting with ``#`` are ignored. Values are kept as
    text; type coercion happens when the Pydantic models validate them.
    """

    def __init__(self, config_path: Path) -> None:
        self._config_path = config_path
        if not config_path.exists():
            raise ConfigFileError(f"Configuration file not found: {config_path}")
        if not config_path.is_file():
            raise ConfigFileError(f"Configuration path is not a file: {config_path}")

    @property
    def source_description(self) -> str:
        return f"config file: {self._config_path}"

    def load(self) -> dict[str, Any]:
        """Parse the file into a flat mapping.

        Raises:
            ConfigFileError: On lines without ``=``, empty keys or repeated keys
        """
        try:
            text = self._config_path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise ConfigFileError(f"Failed to read configuration: {e}") from e
        return parse_key_values(text, self.source_description)


def parse_key_values(text: str, source: str = "config text") -> dict[str, str]:
    """Parse `key = value` lines into a dict, rejecting malformed or repeated keys."""
    values: dict[str, str] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigFileError(f"Expected 'key = value' at line {line_number} of {source}: {raw_line!r}")
        if key in values:
            raise ConfigFileError(f"Key '{key}' repeated at line {line_number} of {source}")
        values[key] = value.strip()
    return values


def render_key_values(items: dict[str, str]) -> str:
    """Inverse of :func:`parse_key_values` for already-formatted values."""
    return "".join(f"{key} = {value}\n" for key, value in items.items())
