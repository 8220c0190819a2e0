"""
Realizability Exception Classes
===============================

Exception hierarchy for instance loading, closure computation, oracles,
reductions, the PRAM simulator and AuxPDA handling.

Hierarchy:
    RealizabilityError (base)
    ├── InputError - malformed or invalid user input
    │   ├── FormatError - instance/digraph/machine file parse failures
    │   ├── InstanceValidationError - graph violates structural invariants
    │   ├── LabelStringError - malformed alternating label string
    │   ├── MethodNotApplicableError - closure method incompatible with variant
    │   ├── ParameterError - bad generator/reduction parameter or index
    │   └── MachineError - invalid AuxPDA description
    ├── MatrixError - matrix operands unusable
    │   ├── DimensionMismatchError - operand sizes disagree
    │   └── GapSymmetryError - gap matrix breaks the symmetric-gap identities
    ├── BudgetError - a configured work limit was hit
    │   ├── InstanceTooLargeError - vertex count above the size cap
    │   ├── IterationBudgetExceeded - closure did not converge in time
    │   ├── OuterBudgetExceeded - PRAM outer loop did not converge in time
    │   ├── OracleBudgetExceeded - walk enumeration too large
    │   └── EnumerationBudgetExceeded - configuration space too large
    └── PramInvariantError - hook round broke the pseudoforest shape
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from realizability.models import ValidationReport


class RealizabilityError(Exception):
    """Base exception for realizability operations.

    Attributes:
        code: Optional error code for programmatic handling
    """

    def __init__(self, message: str, code: str | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.code = code

    def __str__(self) -> str:
        if self.code:
            return f"[{self.code}] {self.message}"
        return self.message


# =============================================================================
# Input errors
# =============================================================================


class InputError(RealizabilityError):
    """Problem with what the caller supplied."""

    pass


class FormatError(InputError):
    """Text or JSON input could not be parsed.

    Raised when:
    - Missing or wrong header line (``realizability v1`` / ``digraph v1``)
    - Unknown directive or malformed integer on a numbered line
    - Machine JSON does not match the AuxPDA schema
    """

    def __init__(self, message: str, line: int | None = None, code: str | None = "PARSE_ERROR") -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, code)
        self.line = line


class InstanceValidationError(InputError):
    """Graph rejected by validation.

    Raised when:
    - initialize() is given a graph whose ValidationReport has violations
    """

    def __init__(self, report: ValidationReport) -> None:
        summary = "; ".join(report.violations)
        super().__init__(f"invalid instance: {summary}", "INVALID_INSTANCE")
        self.report = report


class LabelStringError(InputError):
    """Label string does not alternate vertex and edge tokens.

    Raised when:
    - The string is empty, starts or ends with an edge token
    - Two vertex tokens or two edge tokens are adjacent
    - A token is neither a label nor push/pop/eps
    """

    pass


class MethodNotApplicableError(InputError):
    """Closure method cannot run on the instance's variant.

    Raised when:
    - SymmetricSquare or the PRAM simulator is asked to run on a variant
      without gap symmetry
    """

    pass


class ParameterError(InputError):
    """Invalid parameter to a generator, reduction or query.

    Raised when:
    - gen_theta_n2 gets an odd n or n < 8
    - A reduction receives an instance of the wrong variant
    - A vertex index is outside 0..n-1
    """

    pass


class MachineError(InputError):
    """AuxPDA description is not a valid machine.

    Raised when:
    - A transition references an unknown state or symbol
    - A stack triple would pop or push the bottom marker
    - A wildcard appears where it would not preserve its symbol
    """

    pass


# =============================================================================
# Matrix errors
# =============================================================================


class MatrixError(RealizabilityError):
    """Matrix operands cannot be combined."""

    pass


class DimensionMismatchError(MatrixError):
    """Operand sizes disagree."""

    pass


class GapSymmetryError(MatrixError):
    """Gap matrix is not closed under the symmetric-gap identities.

    Raised when:
    - symmetric_square_step receives a gap matrix that differs from one of
      its row-pair, column-pair or block transposes
    - symmetric_square_step receives a standard matrix that differs from
      its transpose
    """

    pass


# =============================================================================
# Budget errors
# =============================================================================


class BudgetError(RealizabilityError):
    """A configured work limit was reached."""

    pass


class InstanceTooLargeError(BudgetError):
    """Vertex count exceeds the configured size cap."""

    pass


class IterationBudgetExceeded(BudgetError):
    """Closure did not reach a fixpoint within max_iters squarings."""

    pass


class OuterBudgetExceeded(BudgetError):
    """PRAM outer loop did not reach a fixpoint within its budget."""

    pass


class OracleBudgetExceeded(BudgetError):
    """Walk enumeration visited more states than the work budget allows."""

    pass


class EnumerationBudgetExceeded(BudgetError):
    """Surface configuration space is larger than the enumeration budget."""

    pass


class PramInvariantError(RealizabilityError):
    """Pointer array is not a rooted pseudoforest after a hook round.

    Raised when:
    - A cycle of length above one survives the mutual-hook resolution
    - A tree's root is not its minimum member
    """

    pass
