"""
Realizability Configuration Module
==================================

Pydantic v2 based configuration for the realizability tools.
Supports TOML file loading and validation.
"""

from __future__ import annotations

import tomllib
from pathlib import Path
from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field

# =============================================================================
# Defaults
# =============================================================================

DEFAULT_MAX_VERTICES = 128
DEFAULT_ORACLE_WORK_BUDGET = 20_000_000
DEFAULT_CONFIG_GRAPH_BUDGET = 200_000
CONFIG_FILE_NAME = ".realizability.toml"

ClosureMethodName = Literal["square", "simple", "symmetric"]


# =============================================================================
# Configuration Model
# =============================================================================


class RealizabilityConfig(BaseModel):
    """Configuration for the realize command and library defaults.

    Attributes:
        max_vertices: Size cap enforced by initialize().
        closure_method: Squaring variant used when a command gets no --method.
        max_iters: Squaring budget; None means 8*ceil(log2(n+1))+8.
        oracle_work_budget: Walk states the enumeration oracle may visit.
        config_graph_budget: Upper bound on the AuxPDA surface configuration space.
        pram_jump_rounds: Pointer-jump rounds per outer round; None means ceil(log2(n^2))+1.
        pram_max_outer: PRAM outer-round budget; None means 8*ceil(log2(n+1))+8.
        log_level: Logging level used when --debug is not given.
    """

    model_config = ConfigDict(
        validate_assignment=True,
        frozen=False,
        extra="ignore",
    )

    max_vertices: Annotated[int, Field(gt=0)] = DEFAULT_MAX_VERTICES
    closure_method: ClosureMethodName = "simple"
    max_iters: Annotated[int, Field(gt=0)] | None = None
    oracle_work_budget: Annotated[int, Field(gt=0)] = DEFAULT_ORACLE_WORK_BUDGET
    config_graph_budget: Annotated[int, Field(gt=0)] = DEFAULT_CONFIG_GRAPH_BUDGET
    pram_jump_rounds: Annotated[int, Field(gt=0)] | None = None
    pram_max_outer: Annotated[int, Field(gt=0)] | None = None
    log_level: str = "WARNING"

    @classmethod
    def load(cls, config_path: Path | None = None) -> Self:
        """Load configuration from TOML file.

        Args:
            config_path: Path to TOML config file. If None, searches for
                         .realizability.toml in the current directory and its parents.

        Returns:
            RealizabilityConfig instance with loaded or default values.
        """
        toml_path = config_path if config_path and config_path.exists() else cls._find_config_file()

        if toml_path:
            try:
                with open(toml_path, "rb") as f:
                    data = tomllib.load(f)
                return cls.model_validate(data)
            except (tomllib.TOMLDecodeError, OSError, ValueError):
                pass

        return cls()

    @classmethod
    def _find_config_file(cls) -> Path | None:
        """Find the nearest config file walking up from the current directory."""
        cwd = Path.cwd()
        for parent in [cwd, *list(cwd.parents)]:
            candidate = parent / CONFIG_FILE_NAME
            if candidate.is_file():
                return candidate
        return None

    def to_toml(self) -> str:
        """Generate TOML string from config.

        Returns:
            TOML formatted configuration string.
        """

        def optional(key: str, value: int | None) -> str:
            if value is None:
                return f"# {key} = <derived from n>"
            return f"{key} = {value}"

        return f'''# realizability configuration

max_vertices = {self.max_vertices}
closure_method = "{self.closure_method}"
{optional("max_iters", self.max_iters)}
log_level = "{self.log_level}"

# Work budgets
oracle_work_budget = {self.oracle_work_budget}
config_graph_budget = {self.config_graph_budget}

# PRAM simulator
{optional("pram_jump_rounds", self.pram_jump_rounds)}
{optional("pram_max_outer", self.pram_max_outer)}
'''
