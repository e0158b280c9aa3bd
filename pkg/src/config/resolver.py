"""Locate the configuration file for a run."""

from pathlib import Path

from src.config.kv_source import KeyValueConfigSource
from src.config.protocols import ConfigSource
from src.config.yaml_source import YAMLConfigSource
from src.exceptions import ConfigFileError

# searched in the working directory, first hit wins
WORKING_DIRECTORY_NAMES = ("gafsv.conf", "gafsv.yaml", "gafsv.yml")

YAML_SUFFIXES = frozenset({".yaml", ".yml"})


class ConfigResolver:
    """Pick the file a run reads its settings from.

    An explicit ``--config`` path wins; otherwise the first of
    ``WORKING_DIRECTORY_NAMES`` present in the working directory is used, and
    without either the run relies on built-in defaults.
    """

    def __init__(self, explicit_path: Path | None = None) -> None:
        self.explicit_path = explicit_path

    def resolve(self) -> Path | None:
        """Return the config file path, or None for built-in defaults.

        Raises:
            ConfigFileError: If an explicit path was given but is not a file
        """
        if self.explicit_path is not None:
            if not self.explicit_path.is_file():
                raise ConfigFileError(f"Configuration file not found: {self.explicit_path}")
            return self.explicit_path
        return next((p for p in (Path.cwd() / n for n in WORKING_DIRECTORY_NAMES) if p.is_file()), None)

    @staticmethod
    def source_for(path: Path) -> ConfigSource:
        """Key-value source for plain files, YAML source for .yaml/.yml."""
        if path.suffix.lower() in YAML_SUFFIXES:
            return YAMLConfigSource(path)
        return KeyValueConfigSource(path)
