"""Integration test fixtures: a small synthetic dataset written through the CLI."""

from __future__ import annotations

from pathlib import Path

import pytest

from src.cli.app import run

def pytest_collection_modifyitems(items):
    """Automatically mark all tests in integration/ directory with @pytest.mark.integration."""
    for item in items:
        if "/integration/" in str(item.fspath):
            item.add_marker(pytest.mark.integration)


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    workdir = tmp_path / "cwd"
    workdir.mkdir()
    monkeypatch.chdir(workdir)


@pytest.fixture(scope="session")
def synthetic_dataset(tmp_path_factory: pytest.TempPathFactory) -> Path:
    """Ten writers (eight train, two eval), four genuines and two forgeries each."""
    out = tmp_path_factory.mktemp("dataset")
    code = run(["synth", "--out", str(out), "--writers", "10", "--genuine", "4", "--forgeries", "2", "--M", "16"])
    assert code == 0
    return out
