"""Tests for exit code mapping."""

from __future__ import annotations

import pytest

from realizability.cli.exit_codes import ExitCode, exit_code_for
from realizability.exceptions import (
    DimensionMismatchError,
    EnumerationBudgetExceeded,
    FormatError,
    GapSymmetryError,
    InstanceTooLargeError,
    InstanceValidationError,
    IterationBudgetExceeded,
    LabelStringError,
    MachineError,
    MethodNotApplicableError,
    OracleBudgetExceeded,
    OuterBudgetExceeded,
    ParameterError,
    PramInvariantError,
    RealizabilityError,
)
from realizability.models import ValidationReport


@pytest.mark.parametrize(
    ("exc", "expected"),
    [
        (FormatError("bad header", line=1), ExitCode.USAGE_ERROR),
        (InstanceValidationError(ValidationReport(violations=("x",))), ExitCode.USAGE_ERROR),
        (LabelStringError("empty label string"), ExitCode.USAGE_ERROR),
        (MethodNotApplicableError("no gap symmetry", "METHOD_NOT_APPLICABLE"), ExitCode.USAGE_ERROR),
        (ParameterError("vertex 9 out of range", "INDEX_OUT_OF_RANGE"), ExitCode.USAGE_ERROR),
        (MachineError("unknown state", "INVALID_MACHINE"), ExitCode.USAGE_ERROR),
        (InstanceTooLargeError("too big", "INSTANCE_TOO_LARGE"), ExitCode.BUDGET_ERROR),
        (IterationBudgetExceeded("no fixpoint", "ITERATION_BUDGET"), ExitCode.BUDGET_ERROR),
        (OuterBudgetExceeded("no fixpoint", "OUTER_BUDGET"), ExitCode.BUDGET_ERROR),
        (OracleBudgetExceeded("too many walks", "ORACLE_BUDGET"), ExitCode.BUDGET_ERROR),
        (EnumerationBudgetExceeded("too many configs", "ENUMERATION_BUDGET"), ExitCode.BUDGET_ERROR),
        (DimensionMismatchError("shape"), ExitCode.OPERATION_ERROR),
        (GapSymmetryError("asymmetric", "GAP_NOT_SYMMETRIC"), ExitCode.OPERATION_ERROR),
        (PramInvariantError("cycle", "PRAM_INVARIANT"), ExitCode.OPERATION_ERROR),
        (RealizabilityError("unknown"), ExitCode.OPERATION_ERROR),
    ],
    ids=[
        "FormatError",
        "InstanceValidationError",
        "LabelStringError",
        "MethodNotApplicableError",
        "ParameterError",
        "MachineError",
        "InstanceTooLargeError",
        "IterationBudgetExceeded",
        "OuterBudgetExceeded",
        "OracleBudgetExceeded",
        "EnumerationBudgetExceeded",
        "DimensionMismatchError",
        "GapSymmetryError",
        "PramInvariantError",
        "RealizabilityError-generic",
    ],
)
def test_exit_code_for(exc: RealizabilityError, expected: ExitCode) -> None:
    assert exit_code_for(exc) == expected


def test_exit_codes_are_ints() -> None:
    assert ExitCode.SUCCESS == 0
    assert ExitCode.NO_ANSWER == 1
    assert ExitCode.USAGE_ERROR == 2
    assert ExitCode.BUDGET_ERROR == 3
    assert ExitCode.OPERATION_ERROR == 4


class TestErrorMessages:
    def test_code_prefixes_message(self) -> None:
        assert str(ParameterError("vertex 9 out of range", "INDEX_OUT_OF_RANGE")) == (
            "[INDEX_OUT_OF_RANGE] vertex 9 out of range"
        )

    def test_format_error_carries_line(self) -> None:
        err = FormatError("unknown statement 'foo'", line=4)
        assert err.line == 4
        assert err.message == "line 4: unknown statement 'foo'"
        assert err.code == "PARSE_ERROR"

    def test_validation_error_joins_violations(self) -> None:
        report = ValidationReport(violations=("a", "b"))
        err = InstanceValidationError(report)
        assert err.report is report
        assert err.message == "invalid instance: a; b"
        assert err.code == "INVALID_INSTANCE"
