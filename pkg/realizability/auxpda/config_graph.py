"""
Surface configuration graphs
============================

A surface configuration is (state, input head, work tape, work head, stack
top). Vertices are the surface configurations reachable from the start on a
given input; a transition from A to B becomes a push, pop or eps edge by its
stack effect, and every vertex is labeled with its stack top. Accepting
configurations with ``$`` on top get an eps edge to one canonical halting
vertex. The machine accepts exactly when start and halt are realizable.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from realizability.auxpda.machine import (
    ANY,
    BLANK,
    BOTTOM,
    HALT_STATE,
    LEFT_END,
    RIGHT_END,
    AuxPdaSpec,
    StackEffect,
    Transition,
    Triple,
)
from realizability.closure import ClosureMethod, query, transitive_closure
from realizability.config import DEFAULT_CONFIG_GRAPH_BUDGET, DEFAULT_MAX_VERTICES
from realizability.core import Instance, initialize
from realizability.exceptions import EnumerationBudgetExceeded, MachineError, ParameterError
from realizability.models import Edge, EdgeKind, LabeledGraph, ProblemVariant

logger = logging.getLogger(__name__)


class SurfaceConfig(NamedTuple):
    state: str
    input_pos: int
    work: tuple[str, ...]
    work_pos: int
    top: str

    def __str__(self) -> str:
        tape = "".join(self.work)
        return f"({self.state}, in@{self.input_pos}, {tape}@{self.work_pos}, top={self.top})"


@dataclass(frozen=True)
class ConfigGraph:
    instance: Instance
    s: int
    t: int
    configs: tuple[SurfaceConfig, ...]


# =============================================================================
# Step relation
# =============================================================================


@dataclass(frozen=True)
class CompiledStep:
    transition: Transition
    effect: StackEffect


def compile_steps(machine: AuxPdaSpec) -> dict[str, list[CompiledStep]]:
    """Transitions grouped by source state with their stack effects resolved."""
    steps: dict[str, list[CompiledStep]] = {state: [] for state in machine.states}
    for transition in machine.transitions:
        steps[transition.source].append(CompiledStep(transition, transition.stack.stack_effect()))
    return steps


def input_cells(machine: AuxPdaSpec, word: Sequence[str]) -> tuple[str, ...]:
    """Input tape contents including end markers.

    Raises:
        ParameterError: a symbol is not in the input alphabet
    """
    unknown = sorted(set(word) - set(machine.input_alphabet))
    if unknown:
        raise ParameterError(f"input symbols {unknown} are not in the input alphabet", "INVALID_INPUT")
    return (LEFT_END, *word, RIGHT_END)


def _matches(pattern: str, symbol: str) -> bool:
    return pattern == ANY or pattern == symbol


def apply_head(triple: Triple, cells: tuple[str, ...], pos: int) -> tuple[tuple[str, ...], int] | None:
    """Apply a tape triple at head position ``pos``; None when it does not fit."""
    if triple.move == 0:
        if not _matches(triple.before[0], cells[pos]):
            return None
        written = list(cells)
        if triple.after[0] != ANY:
            written[pos] = triple.after[0]
        return tuple(written), pos

    left = pos if triple.move == 1 else pos - 1
    if left < 0 or left + 1 >= len(cells):
        return None
    if not (_matches(triple.before[0], cells[left]) and _matches(triple.before[1], cells[left + 1])):
        return None
    written = list(cells)
    for offset, symbol in enumerate(triple.after):
        if symbol != ANY:
            written[left + offset] = symbol
    return tuple(written), pos + triple.move


def head_moves(
    steps: Sequence[CompiledStep],
    tape: tuple[str, ...],
    input_pos: int,
    work: tuple[str, ...],
    work_pos: int,
) -> Iterator[tuple[CompiledStep, int, tuple[str, ...], int]]:
    """Steps whose tape triples fit, with the resulting head positions and work tape."""
    for step in steps:
        input_triple, work_triple = step.transition.tapes
        moved_input = apply_head(input_triple, tape, input_pos)
        if moved_input is None:
            continue
        moved_work = apply_head(work_triple, work, work_pos)
        if moved_work is None:
            continue
        yield step, moved_input[1], moved_work[0], moved_work[1]


def surface_successors(
    machine: AuxPdaSpec,
    steps: dict[str, list[CompiledStep]],
    tape: tuple[str, ...],
    config: SurfaceConfig,
) -> Iterator[tuple[SurfaceConfig, EdgeKind]]:
    """Successor surface configurations; a pop may expose any matching symbol."""
    moves = head_moves(steps.get(config.state, []), tape, config.input_pos, config.work, config.work_pos)
    for step, input_pos, work, work_pos in moves:
        effect = step.effect
        if not _matches(effect.before, config.top):
            continue
        if effect.kind is EdgeKind.EPS:
            tops = [config.top]
        elif effect.kind is EdgeKind.PUSH:
            tops = [effect.after]
        else:
            tops = list(machine.stack_alphabet) if effect.after == ANY else [effect.after]
        for top in tops:
            yield SurfaceConfig(step.transition.target, input_pos, work, work_pos, top), effect.kind


# =============================================================================
# Construction
# =============================================================================


def surface_config_count(machine: AuxPdaSpec, word_length: int) -> int:
    """Upper bound |Q| * (|w|+2) * |G|^W * W * |S| on surface configurations."""
    width = machine.work_tape_length
    return (
        len(machine.states)
        * (word_length + 2)
        * len(machine.work_alphabet) ** width
        * width
        * len(machine.stack_alphabet)
    )


def start_config(machine: AuxPdaSpec) -> SurfaceConfig:
    return SurfaceConfig(machine.initial, 0, (BLANK,) * machine.work_tape_length, 0, BOTTOM)


def halt_config(machine: AuxPdaSpec) -> SurfaceConfig:
    return SurfaceConfig(HALT_STATE, 0, (BLANK,) * machine.work_tape_length, 0, BOTTOM)


def _reachable(start: SurfaceConfig, adjacency: dict[SurfaceConfig, set[SurfaceConfig]]) -> set[SurfaceConfig]:
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in adjacency.get(queue.popleft(), ()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def config_graph(
    machine: AuxPdaSpec,
    word: Sequence[str],
    budget: int = DEFAULT_CONFIG_GRAPH_BUDGET,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ConfigGraph:
    """Build the surface configuration graph of ``machine`` on ``word``.

    Only configurations reachable from the start and co-reachable to the
    halting vertex are kept; when halt is unreachable the graph holds just
    the start and halting vertices.

    Raises:
        ParameterError: the word uses symbols outside the input alphabet
        MachineError: the machine has no final state, or two transitions put
            different stack actions on the same configuration pair
        EnumerationBudgetExceeded: the surface configuration bound exceeds budget
    """
    if not machine.finals:
        raise MachineError("machine has no final state", "NO_FINAL_STATE")
    tape = input_cells(machine, word)
    bound = surface_config_count(machine, len(word))
    if bound > budget:
        raise EnumerationBudgetExceeded(
            f"up to {bound} surface configurations, enumeration budget is {budget}", "ENUMERATION_BUDGET"
        )

    symmetric = machine.is_symmetric
    steps = compile_steps(machine)
    start = start_config(machine)
    halt = halt_config(machine)
    finals = set(machine.finals)

    kinds: dict[tuple[SurfaceConfig, SurfaceConfig], set[EdgeKind]] = {}
    order = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        config = queue.popleft()
        for nxt, kind in surface_successors(machine, steps, tape, config):
            kinds.setdefault((config, nxt), set()).add(kind)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
        if config.state in finals and config.top == BOTTOM:
            kinds.setdefault((config, halt), set()).add(EdgeKind.EPS)
            if symmetric:
                kinds.setdefault((halt, config), set()).add(EdgeKind.EPS)

    forward: dict[SurfaceConfig, set[SurfaceConfig]] = {}
    backward: dict[SurfaceConfig, set[SurfaceConfig]] = {}
    for a, b in kinds:
        forward.setdefault(a, set()).add(b)
        backward.setdefault(b, set()).add(a)
    useful = _reachable(start, forward) & _reachable(halt, backward)
    kept = [c for c in order if c in useful and c != halt] or [start]
    if kept[0] != start:
        kept.insert(0, start)
    kept.append(halt)
    index = {config: i for i, config in enumerate(kept)}
    logger.debug(
        "config graph: %d reachable surface configurations, %d kept (bound %d)", len(order), len(kept), bound
    )

    for config in kept:
        kinds.setdefault((config, config), set()).add(EdgeKind.EPS)
    edges: list[Edge] = []
    for (a, b), present in kinds.items():
        if a not in index or b not in index:
            continue
        if len(present) > 1:
            names = ",".join(sorted(kind.value for kind in present))
            raise MachineError(f"transitions give conflicting stack actions {names} from {a} to {b}", "CONFLICT")
        edges.append(Edge(u=index[a], v=index[b], kind=next(iter(present))))

    k = len(machine.stack_alphabet)
    labels = tuple(machine.stack_alphabet.index(config.top) + 1 for config in kept)
    if symmetric:
        variant = ProblemVariant.ONE_SLOGCFL if k == 1 else ProblemVariant.SLOGCFL
    else:
        variant = ProblemVariant.ONE_LOGCFL if k == 1 else ProblemVariant.LOGCFL
    graph = LabeledGraph(n=len(kept), k=k, labels=labels, edges=tuple(edges), directed=not symmetric)
    instance = initialize(graph, variant, max_vertices)
    return ConfigGraph(instance=instance, s=0, t=len(kept) - 1, configs=tuple(kept))


def accepts(
    machine: AuxPdaSpec,
    word: Sequence[str],
    method: ClosureMethod = ClosureMethod.SIMPLE,
    budget: int = DEFAULT_CONFIG_GRAPH_BUDGET,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> bool:
    """Decide acceptance by closing the configuration graph."""
    graph = config_graph(machine, word, budget=budget, max_vertices=max_vertices)
    result = transitive_closure(graph.instance, method=method)
    return query(result, graph.s, graph.t)
