"""CLI context object."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from realizability.cli.output import OutputConfig, OutputMode
from realizability.config import RealizabilityConfig


@dataclass
class CLIContext:
    """Context object shared across commands via ctx.obj."""

    config: RealizabilityConfig = field(default_factory=RealizabilityConfig)
    output: OutputConfig = OutputConfig(mode=OutputMode.PRETTY)
    config_path: Path | None = None
