"""Tests for output module: OutputMode resolution and plain-text helpers."""

from __future__ import annotations

import json
import sys
from unittest.mock import patch

import pytest
from rich.markup import escape

from realizability.cli.output import (
    OutputConfig,
    OutputMode,
    configure_output,
    print_decision,
    print_error,
    print_json,
    print_key_value,
    print_line,
    print_raw,
    print_success,
    print_validation_error,
    print_variants_table,
    print_violations,
    resolve_output_mode,
    sanitize_tsv,
    set_quiet,
)

# =============================================================================
# resolve_output_mode
# =============================================================================


class TestResolveOutputMode:
    def test_pretty_flag_true(self) -> None:
        assert resolve_output_mode(pretty_flag=True) is OutputMode.PRETTY

    def test_pretty_flag_false(self) -> None:
        assert resolve_output_mode(pretty_flag=False) is OutputMode.PLAIN

    def test_tty_true_returns_pretty(self) -> None:
        with patch.object(sys.stdout, "isatty", return_value=True):
            assert resolve_output_mode() is OutputMode.PRETTY

    def test_tty_false_returns_plain(self) -> None:
        with patch.object(sys.stdout, "isatty", return_value=False):
            assert resolve_output_mode() is OutputMode.PLAIN

    def test_pretty_flag_overrides_pipe(self) -> None:
        with patch.object(sys.stdout, "isatty", return_value=False):
            assert resolve_output_mode(pretty_flag=True) is OutputMode.PRETTY


# =============================================================================
# OutputConfig
# =============================================================================


class TestOutputConfig:
    def test_is_json(self) -> None:
        cfg = OutputConfig(mode=OutputMode.JSON)
        assert cfg.is_json
        assert not cfg.is_plain
        assert not cfg.is_pretty

    def test_is_plain(self) -> None:
        cfg = OutputConfig(mode=OutputMode.PLAIN)
        assert cfg.is_plain
        assert not cfg.is_json

    def test_is_pretty(self) -> None:
        cfg = OutputConfig(mode=OutputMode.PRETTY)
        assert cfg.is_pretty
        assert not cfg.is_plain


# =============================================================================
# Plain-text output helpers
# =============================================================================


class TestPlainTextOutput:
    def setup_method(self) -> None:
        configure_output(OutputMode.PLAIN)

    def teardown_method(self) -> None:
        configure_output(OutputMode.PRETTY)

    def test_print_line_strips_markup(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_line("[bold]Closure[/bold] [cyan]done[/cyan]")
        out = capsys.readouterr().out
        assert out.strip() == "Closure done"
        assert "[bold]" not in out

    def test_print_line_keeps_escaped_brackets(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_line(f"Config file: {escape('/tmp/run[x]/c.toml')}")
        assert capsys.readouterr().out == "Config file: /tmp/run[x]/c.toml\n"

    def test_print_success_plain(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_success("Wrote out.inst")
        out = capsys.readouterr().out
        assert out.strip() == "Wrote out.inst"
        assert "\033" not in out

    def test_print_error_plain(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_error("bad header", "PARSE_ERROR")
        err = capsys.readouterr().err
        assert "Error: bad header" in err
        assert "Code: PARSE_ERROR" in err
        assert "\033" not in err

    def test_print_validation_error_points_at_help(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_validation_error("--seed is required", "realize bench")
        err = capsys.readouterr().err
        assert "--seed is required. Run 'realize bench --help' for usage." in err

    def test_print_key_value_plain_tab_separated(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_key_value({"method": "simple", "iterations": 3}, "Closure")
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines == ["method\tsimple", "iterations\t3"]

    def test_print_json_plain_is_indented(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_json({"n": 3, "gap_ones": 9})
        out = capsys.readouterr().out
        assert json.loads(out) == {"n": 3, "gap_ones": 9}
        assert '  "n": 3' in out

    def test_print_violations_one_per_line(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_violations(["missing reflexive ε edges at vertices [2]", "multi-edge (0,1)\tlabeled eps,push"])
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines == ["missing reflexive ε edges at vertices [2]", "multi-edge (0,1) labeled eps,push"]

    def test_variants_table_lists_all_six(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_variants_table()
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "Variant\tName\tLabels\tStandard symmetric\tGap symmetric"
        assert "sgslogcfl\tSGSLogCFL\tk >= 2\tyes\tyes" in lines
        assert "1logcfl\t1LogCFL\tk = 1\tno\tno" in lines
        assert len(lines) == 7


# =============================================================================
# Byte-stable output
# =============================================================================


class TestByteStableOutput:
    @pytest.mark.parametrize("mode", list(OutputMode), ids=[m.value for m in OutputMode])
    def test_decision_is_bare(self, mode: OutputMode, capsys: pytest.CaptureFixture[str]) -> None:
        configure_output(mode)
        try:
            print_decision(True)
            print_decision(False)
        finally:
            configure_output(OutputMode.PRETTY)
        assert capsys.readouterr().out == "YES\nNO\n"

    def test_print_raw_writes_verbatim(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_raw("E 0 0\nG 0 0 0 0\n")
        assert capsys.readouterr().out == "E 0 0\nG 0 0 0 0\n"


# =============================================================================
# sanitize_tsv
# =============================================================================


class TestSanitizeTsv:
    def test_replaces_tab_with_space(self) -> None:
        assert sanitize_tsv("a\tb") == "a b"

    def test_replaces_newline_with_space(self) -> None:
        assert sanitize_tsv("line1\nline2") == "line1 line2"

    def test_removes_carriage_return(self) -> None:
        assert sanitize_tsv("text\r\nmore") == "text  more"

    def test_strips_esc_control_character(self) -> None:
        assert sanitize_tsv("hello\x1b[31mred\x1b[0m") == "hello[31mred[0m"

    def test_strips_null_and_del(self) -> None:
        assert sanitize_tsv("a\x00b\x7fc") == "abc"


# =============================================================================
# PRETTY mode regression
# =============================================================================


class TestPrettyModeRegression:
    def setup_method(self) -> None:
        configure_output(OutputMode.PRETTY)

    def test_print_key_value_pretty_with_title(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_key_value({"n": 4, "iterations": 2}, "Closure")
        out = capsys.readouterr().out
        assert "Closure" in out
        assert "n:" in out
        assert "iterations:" in out


# =============================================================================
# Quiet mode
# =============================================================================


class TestQuietMode:
    def setup_method(self) -> None:
        configure_output(OutputMode.PLAIN)
        set_quiet(True)

    def teardown_method(self) -> None:
        set_quiet(False)
        configure_output(OutputMode.PRETTY)

    def test_print_success_suppressed(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_success("should not appear")
        assert capsys.readouterr().out == ""

    def test_print_error_not_suppressed(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_error("visible error")
        assert "visible error" in capsys.readouterr().err

    def test_decision_not_suppressed(self, capsys: pytest.CaptureFixture[str]) -> None:
        print_decision(True)
        assert capsys.readouterr().out == "YES\n"
