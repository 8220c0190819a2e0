"""Exit code definitions for Unix-style process status reporting.

Maps the RealizabilityError hierarchy to exit codes so that shell scripts
can tell a NO answer from bad input and from an exhausted budget.
"""

from __future__ import annotations

import enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from realizability.exceptions import RealizabilityError


class ExitCode(enum.IntEnum):
    SUCCESS = 0
    NO_ANSWER = 1
    USAGE_ERROR = 2
    BUDGET_ERROR = 3
    OPERATION_ERROR = 4


def exit_code_for(exc: RealizabilityError) -> ExitCode:
    """Map a RealizabilityError to the appropriate exit code."""
    from realizability.exceptions import BudgetError, InputError

    if isinstance(exc, InputError):
        return ExitCode.USAGE_ERROR
    if isinstance(exc, BudgetError):
        return ExitCode.BUDGET_ERROR
    return ExitCode.OPERATION_ERROR
