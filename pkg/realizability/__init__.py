"""
Graph Realizability
===================

Realizable paths in vertex- and edge-labeled graphs: a path is realizable
when its push/pop edges match like brackets and the vertex labels around
each matched pair agree.

Main exports:
    - LabeledGraph, ProblemVariant: instances and the six problem variants
    - initialize, validate: instance construction
    - transitive_closure, query, query_gap: realizability by repeated squaring
    - connect: hook-and-contract connectivity for symmetric-gap variants
    - RealizabilityConfig: configuration management
    - Exception classes: RealizabilityError, InputError, BudgetError, etc.

Example:
    >>> from realizability import LabeledGraph, ProblemVariant, initialize, query, transitive_closure
    >>> graph = LabeledGraph.build([1, 1, 1], [(0, 1, "push"), (1, 2, "pop")])
    >>> result = transitive_closure(initialize(graph, ProblemVariant.LOGCFL))
    >>> query(result, 0, 2)
    True
"""

from realizability.closure import ClosureMethod, ClosureResult, query, query_gap, transitive_closure
from realizability.config import (
    CONFIG_FILE_NAME,
    DEFAULT_CONFIG_GRAPH_BUDGET,
    DEFAULT_MAX_VERTICES,
    DEFAULT_ORACLE_WORK_BUDGET,
    RealizabilityConfig,
)
from realizability.core import Instance, initialize, prune_unmatched, validate
from realizability.exceptions import (
    BudgetError,
    FormatError,
    InputError,
    InstanceValidationError,
    MatrixError,
    RealizabilityError,
)
from realizability.models import Digraph, Edge, EdgeKind, GrammarVariant, LabeledGraph, ProblemVariant
from realizability.pram import connect

__all__ = [
    # Models
    "Digraph",
    "Edge",
    "EdgeKind",
    "GrammarVariant",
    "LabeledGraph",
    "ProblemVariant",
    # Instances
    "Instance",
    "initialize",
    "prune_unmatched",
    "validate",
    # Closure
    "ClosureMethod",
    "ClosureResult",
    "connect",
    "query",
    "query_gap",
    "transitive_closure",
    # Config
    "RealizabilityConfig",
    "CONFIG_FILE_NAME",
    "DEFAULT_CONFIG_GRAPH_BUDGET",
    "DEFAULT_MAX_VERTICES",
    "DEFAULT_ORACLE_WORK_BUDGET",
    # Exceptions
    "RealizabilityError",
    "InputError",
    "FormatError",
    "InstanceValidationError",
    "MatrixError",
    "BudgetError",
]


def main() -> None:
    """Entry point for the realize command.

    This function is called by pyproject.toml's [project.scripts]:
        realize = "realizability:main"
    """
    from realizability.cli.app import cli_main

    cli_main()
