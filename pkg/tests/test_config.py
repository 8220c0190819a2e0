"""Tests for RealizabilityConfig loading and TOML generation."""

from __future__ import annotations

import tomllib
from pathlib import Path

import pytest
from pydantic import ValidationError

from realizability.config import (
    CONFIG_FILE_NAME,
    DEFAULT_CONFIG_GRAPH_BUDGET,
    DEFAULT_MAX_VERTICES,
    DEFAULT_ORACLE_WORK_BUDGET,
    RealizabilityConfig,
)


@pytest.fixture
def in_tmp(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    monkeypatch.chdir(tmp_path)
    return tmp_path


class TestDefaults:
    def test_default_values(self) -> None:
        config = RealizabilityConfig()
        assert config.max_vertices == DEFAULT_MAX_VERTICES
        assert config.closure_method == "simple"
        assert config.max_iters is None
        assert config.oracle_work_budget == DEFAULT_ORACLE_WORK_BUDGET
        assert config.config_graph_budget == DEFAULT_CONFIG_GRAPH_BUDGET
        assert config.pram_jump_rounds is None
        assert config.pram_max_outer is None
        assert config.log_level == "WARNING"

    def test_assignment_is_validated(self) -> None:
        config = RealizabilityConfig()
        with pytest.raises(ValidationError):
            config.max_vertices = 0

    def test_unknown_method_rejected(self) -> None:
        with pytest.raises(ValidationError):
            RealizabilityConfig.model_validate({"closure_method": "cubic"})

    def test_extra_keys_ignored(self) -> None:
        config = RealizabilityConfig.model_validate({"max_vertices": 12, "colour": "blue"})
        assert config.max_vertices == 12


class TestLoad:
    def test_no_file_gives_defaults(self, in_tmp: Path) -> None:
        assert RealizabilityConfig.load() == RealizabilityConfig()

    def test_explicit_path(self, tmp_path: Path) -> None:
        path = tmp_path / "custom.toml"
        path.write_text('max_vertices = 16\nclosure_method = "square"\nmax_iters = 20\n')
        config = RealizabilityConfig.load(path)
        assert config.max_vertices == 16
        assert config.closure_method == "square"
        assert config.max_iters == 20

    def test_found_in_parent_directory(self, in_tmp: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        (in_tmp / CONFIG_FILE_NAME).write_text("oracle_work_budget = 1000\n")
        nested = in_tmp / "a" / "b"
        nested.mkdir(parents=True)
        monkeypatch.chdir(nested)
        assert RealizabilityConfig._find_config_file() == in_tmp / CONFIG_FILE_NAME
        assert RealizabilityConfig.load().oracle_work_budget == 1000

    def test_broken_toml_falls_back(self, in_tmp: Path) -> None:
        (in_tmp / CONFIG_FILE_NAME).write_text("max_vertices = = 3\n")
        assert RealizabilityConfig.load() == RealizabilityConfig()

    def test_invalid_value_falls_back(self, in_tmp: Path) -> None:
        (in_tmp / CONFIG_FILE_NAME).write_text("max_vertices = -4\n")
        assert RealizabilityConfig.load().max_vertices == DEFAULT_MAX_VERTICES


class TestToToml:
    def test_defaults_parse_back(self) -> None:
        text = RealizabilityConfig().to_toml()
        data = tomllib.loads(text)
        assert RealizabilityConfig.model_validate(data) == RealizabilityConfig()
        assert "max_iters" not in data
        assert "# max_iters = <derived from n>" in text

    def test_set_budgets_are_written(self) -> None:
        config = RealizabilityConfig(max_iters=30, pram_jump_rounds=4, pram_max_outer=12)
        data = tomllib.loads(config.to_toml())
        assert data["max_iters"] == 30
        assert data["pram_jump_rounds"] == 4
        assert data["pram_max_outer"] == 12
