"""Bounded breadth-first simulation of an AuxPDA with its full stack."""

from __future__ import annotations

import enum
import logging
from collections import deque
from collections.abc import Sequence
from typing import NamedTuple

from realizability.auxpda.config_graph import compile_steps, head_moves, input_cells
from realizability.auxpda.machine import ANY, BLANK, BOTTOM, AuxPdaSpec
from realizability.exceptions import ParameterError
from realizability.models import EdgeKind

logger = logging.getLogger(__name__)


class SimulationOutcome(str, enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    BUDGET = "budget"


class SimulationResult(NamedTuple):
    outcome: SimulationOutcome
    steps: int | None
    explored: int


class _FullConfig(NamedTuple):
    state: str
    input_pos: int
    work: tuple[str, ...]
    work_pos: int
    stack: tuple[str, ...]


def direct_simulate(
    machine: AuxPdaSpec,
    word: Sequence[str],
    step_bound: int,
    stack_bound: int,
) -> SimulationResult:
    """Search computations of at most ``step_bound`` steps and stack height ``stack_bound``.

    Accepts when a final state is reached with only ``$`` on the stack.
    Reports BUDGET instead of REJECT whenever some computation was cut off
    by either bound, since it might still have accepted.
    """
    if step_bound < 0 or stack_bound < 1:
        raise ParameterError("step bound must be >= 0 and stack bound >= 1", "INVALID_PARAMETER")
    tape = input_cells(machine, word)
    steps = compile_steps(machine)
    finals = set(machine.finals)

    start = _FullConfig(machine.initial, 0, (BLANK,) * machine.work_tape_length, 0, (BOTTOM,))
    seen = {start}
    queue: deque[tuple[_FullConfig, int]] = deque([(start, 0)])
    truncated = False

    while queue:
        config, depth = queue.popleft()
        if config.state in finals and config.stack == (BOTTOM,):
            logger.debug("accepted after %d steps, %d configurations explored", depth, len(seen))
            return SimulationResult(SimulationOutcome.ACCEPT, depth, len(seen))

        moves = list(head_moves(steps.get(config.state, []), tape, config.input_pos, config.work, config.work_pos))
        if depth == step_bound:
            truncated = truncated or bool(moves)
            continue

        top = config.stack[-1]
        for step, input_pos, work, work_pos in moves:
            effect = step.effect
            if effect.before != ANY and effect.before != top:
                continue
            if effect.kind is EdgeKind.EPS:
                stack = config.stack
            elif effect.kind is EdgeKind.PUSH:
                if len(config.stack) >= stack_bound:
                    truncated = True
                    continue
                stack = (*config.stack, effect.after)
            else:
                if len(config.stack) < 2:
                    continue
                if effect.after != ANY and config.stack[-2] != effect.after:
                    continue
                stack = config.stack[:-1]
            nxt = _FullConfig(step.transition.target, input_pos, work, work_pos, stack)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, depth + 1))

    outcome = SimulationOutcome.BUDGET if truncated else SimulationOutcome.REJECT
    return SimulationResult(outcome, None, len(seen))
