"""Command line interface for realizability."""

from realizability.cli.app import app, cli_main

__all__ = ["app", "cli_main"]
