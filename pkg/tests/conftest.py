"""Shared fixtures: small hand-checked graphs and machines."""

from __future__ import annotations

import json
from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from realizability.auxpda import AuxPdaSpec, parse_machine, symmetric_closure
from realizability.core import Instance, initialize
from realizability.models import LabeledGraph, ProblemVariant

# =============================================================================
# Instance files
# =============================================================================

# 0 -push-> 1 -pop-> 2, all labels 1: only (0,2) besides the diagonal.
PUSH_POP_CHAIN = """\
realizability v1
n=3 k=1 directed=1 variant=1logcfl
edge 0 1 push
edge 1 2 pop
s=0 t=2
"""

# push(1,0) and push(1,2) declared symmetric: 0 -pop-> 1 -push-> 2 realizes
# only under the symmetric-gap grammar.
POP_PUSH_SYMMETRIC = """\
realizability v1
n=3 k=1 directed=0 variant={variant}
edge 1 0 push
edge 1 2 push
s=0 t=2
"""

# Lone forward arcs 0 -> 1 <- 2: the walk 0,1,2 has balance +1 -1.
DIGRAPH_V = """\
digraph v1
n=3
arc 0 1
arc 2 1
s=0 t=2
"""


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


# =============================================================================
# Graphs
# =============================================================================


@pytest.fixture
def chain_instance() -> Instance:
    graph = LabeledGraph.build([1, 1, 1], [(0, 1, "push"), (1, 2, "pop")])
    return initialize(graph, ProblemVariant.LOGCFL)


@pytest.fixture
def nested_instance() -> Instance:
    """0 push 1 push 2 pop 3 pop 4: (0,4) and (1,3) are realizable."""
    graph = LabeledGraph.build(
        [1, 1, 1, 1, 1],
        [(0, 1, "push"), (1, 2, "push"), (2, 3, "pop"), (3, 4, "pop")],
    )
    return initialize(graph, ProblemVariant.ONE_LOGCFL)


def pop_push_graph() -> LabeledGraph:
    return LabeledGraph.build([1, 1, 1], [(1, 0, "push"), (1, 2, "push")], k=1, directed=False)


@pytest.fixture
def pop_push_sgs() -> Instance:
    return initialize(pop_push_graph(), ProblemVariant.ONE_SGSLOGCFL)


@pytest.fixture
def pop_push_s() -> Instance:
    return initialize(pop_push_graph(), ProblemVariant.ONE_SLOGCFL)


# =============================================================================
# Machines
# =============================================================================


def dyck_machine_dict() -> dict[str, Any]:
    """Balanced parentheses: push X on '(', pop X on ')', accept at '>' with only $ left.

    The input head starts on '<' and always sits on the symbol being read.
    """
    keep_work = ["_", 0, "_"]
    return {
        "states": ["q0", "q", "f"],
        "initial": "q0",
        "finals": ["f"],
        "inputAlphabet": ["(", ")"],
        "stackAlphabet": ["$", "X"],
        "workAlphabet": ["_"],
        "workTapeLength": 1,
        "transitions": [
            {"from": "q0", "to": "q", "stack": ["$", 0, "$"], "tapes": [["<", "*", 1, "<", "*"], keep_work]},
            {"from": "q", "to": "q", "stack": ["*", 1, "X"], "tapes": [["(", "*", 1, "(", "*"], keep_work]},
            {"from": "q", "to": "q", "stack": ["X", -1, "*"], "tapes": [[")", "*", 1, ")", "*"], keep_work]},
            {"from": "q", "to": "f", "stack": ["$", 0, "$"], "tapes": [[">", 0, ">"], keep_work]},
        ],
    }


@pytest.fixture
def dyck_json() -> str:
    return json.dumps(dyck_machine_dict())


@pytest.fixture
def dyck(dyck_json: str) -> AuxPdaSpec:
    return parse_machine(dyck_json)


@pytest.fixture
def dyck_symmetric(dyck: AuxPdaSpec) -> AuxPdaSpec:
    return symmetric_closure(dyck)
