"""Unit tests for key = value and YAML config sources and path resolution."""

from __future__ import annotations

from pathlib import Path

import pytest

from src.config.kv_source import KeyValueConfigSource, parse_key_values, render_key_values
from src.config.protocols import ConfigSource
from src.config.resolver import ConfigResolver
from src.config.yaml_source import YAMLConfigSource
from src.exceptions import ConfigFileError


class TestParseKeyValues:
    def test_comments_and_blank_lines_ignored(self) -> None:
        assert parse_key_values("# header\n\n  d = 16  \nfusion=concat_only\n") == {
            "d": "16",
            "fusion": "concat_only",
        }

    def test_line_without_equals(self) -> None:
        with pytest.raises(ConfigFileError, match="line 2"):
            parse_key_values("d = 16\nsteps 10\n")

    def test_empty_key(self) -> None:
        with pytest.raises(ConfigFileError):
            parse_key_values(" = 3\n")

    def test_repeated_key(self) -> None:
        with pytest.raises(ConfigFileError, match="repeated"):
            parse_key_values("d = 1\nd = 2\n")

    def test_render_is_inverse(self) -> None:
        items = {"M": "64", "channels": "v,dp"}
        assert parse_key_values(render_key_values(items)) == items


class TestKeyValueConfigSource:
    def test_load(self, tmp_path: Path) -> None:
        path = tmp_path / "gafsv.conf"
        path.write_text("steps = 5\n", encoding="utf-8")
        source = KeyValueConfigSource(path)
        assert isinstance(source, ConfigSource)
        assert source.load() == {"steps": "5"}

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigFileError, match="not found"):
            KeyValueConfigSource(tmp_path / "missing.conf")

    def test_directory_rejected(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigFileError, match="not a file"):
            KeyValueConfigSource(tmp_path)


class TestYAMLConfigSource:
    def test_load_flat_mapping(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("steps: 5\nbranch_channels: [4, 8]\n", encoding="utf-8")
        assert YAMLConfigSource(path).load() == {"steps": 5, "branch_channels": [4, 8]}

    def test_empty_document(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("", encoding="utf-8")
        assert YAMLConfigSource(path).load() == {}

    def test_invalid_yaml(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("steps: [1, 2\n", encoding="utf-8")
        with pytest.raises(ConfigFileError, match="Failed to parse"):
            YAMLConfigSource(path).load()

    def test_nested_sections_rejected(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("loss:\n  margin: 0.3\n", encoding="utf-8")
        with pytest.raises(ConfigFileError, match="nested"):
            YAMLConfigSource(path).load()

    def test_non_mapping_rejected(self, tmp_path: Path) -> None:
        path = tmp_path / "run.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigFileError, match="mapping"):
            YAMLConfigSource(path).load()


class TestConfigResolver:
    def test_explicit_path(self, tmp_path: Path) -> None:
        path = tmp_path / "x.conf"
        path.write_text("", encoding="utf-8")
        assert ConfigResolver(explicit_path=path).resolve() == path

    def test_explicit_missing_path(self, tmp_path: Path) -> None:
        with pytest.raises(ConfigFileError):
            ConfigResolver(explicit_path=tmp_path / "nope.conf").resolve()

    def test_working_directory_default(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        (tmp_path / "gafsv.yaml").write_text("steps: 1\n", encoding="utf-8")
        monkeypatch.chdir(tmp_path)
        assert ConfigResolver().resolve() == tmp_path / "gafsv.yaml"

    def test_no_default_file(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.chdir(tmp_path)
        assert ConfigResolver().resolve() is None

    @pytest.mark.parametrize("name,expected", [("a.yaml", YAMLConfigSource), ("a.YML", YAMLConfigSource), ("a.conf", KeyValueConfigSource)])
    def test_source_for_suffix(self, tmp_path: Path, name: str, expected: type) -> None:
        path = tmp_path / name
        path.write_text("", encoding="utf-8")
        assert isinstance(ConfigResolver.source_for(path), expected)
