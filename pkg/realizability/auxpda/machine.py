"""
AuxPDA machine descriptions
===========================

A machine has states, an input alphabet, a pushdown alphabet containing the
bottom marker ``$``, one work tape of fixed length over a work alphabet
containing the blank ``_``, and transitions. Each transition carries one
stack triple and one triple per tape (input tape first, then the work tape).

Triples are written as JSON lists ``[symbols..., move, symbols...]``:

Stack:
    ``[a, 0, a]``            no stack move, top stays a
    ``[a, "_", 1, a, d]``    push d over a (``[a, 1, d]`` for short)
    ``[a, b, -1, a, "_"]``   pop b exposing a (``[b, -1, a]`` for short)

Tape:
    ``[a, 0, b]``            scan a, write b, stay
    ``[a, b, 1, c, d]``      scan a with b to the right; write c, d; move right
    ``[a, b, -1, c, d]``     scan b with a to the left; write c, d; move left

The input tape is read-only and delimited by ``<`` and ``>``. ``*`` matches
any symbol and may only appear where the same position keeps ``*`` after
the move.
"""

from __future__ import annotations

from typing import Any, Literal, NamedTuple, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from realizability.exceptions import MachineError
from realizability.models import EdgeKind

BOTTOM = "$"
BLANK = "_"
LEFT_END = "<"
RIGHT_END = ">"
ANY = "*"
HALT_STATE = "<halt>"

Move = Literal[-1, 0, 1]


class StackEffect(NamedTuple):
    """Normalized stack action: required top before, top after."""

    kind: EdgeKind
    before: str
    after: str


class Triple(BaseModel):
    """One stack or tape triple; ``before``/``after`` hold one or two symbols."""

    model_config = ConfigDict(frozen=True)

    before: tuple[str, ...]
    move: Move
    after: tuple[str, ...]

    @model_validator(mode="before")
    @classmethod
    def _from_list(cls, data: Any) -> Any:
        if not isinstance(data, list | tuple):
            return data
        moves = [i for i, item in enumerate(data) if isinstance(item, int) and not isinstance(item, bool)]
        if len(moves) != 1:
            raise ValueError(f"triple {list(data)} needs exactly one integer move")
        i = moves[0]
        return {"before": tuple(data[:i]), "move": data[i], "after": tuple(data[i + 1 :])}

    @model_validator(mode="after")
    def _shape(self) -> Self:
        if len(self.before) != len(self.after) or len(self.before) not in (1, 2):
            raise ValueError(f"triple {self.to_list()} must have one or two symbols on each side")
        if self.move == 0 and len(self.before) != 1:
            raise ValueError(f"triple {self.to_list()}: a non-moving triple takes one symbol per side")
        for old, new in zip(self.before, self.after, strict=True):
            if (old == ANY) != (new == ANY) and len(self.before) == 2:
                raise ValueError(f"triple {self.to_list()}: '*' must be kept in place")
        return self

    def inverse(self) -> Triple:
        return Triple(before=self.after, move=-self.move, after=self.before)  # type: ignore[arg-type]

    def to_list(self) -> list[str | int]:
        return [*self.before, self.move, *self.after]

    def stack_effect(self) -> StackEffect:
        """Interpret as a stack triple.

        Raises:
            ValueError: the triple rewrites the top without moving, or
                touches the bottom marker
        """
        if self.move == 0:
            (old,), (new,) = self.before, self.after
            if old != new:
                raise ValueError(f"stack triple {self.to_list()} rewrites the top without a push or pop")
            return StackEffect(EdgeKind.EPS, old, new)
        if len(self.before) == 1:
            (old,), (new,) = self.before, self.after
            if self.move == 1:
                effect = StackEffect(EdgeKind.PUSH, old, new)
            else:
                effect = StackEffect(EdgeKind.POP, old, new)
        elif self.move == 1:
            (below, above), (kept, pushed) = self.before, self.after
            if above != BLANK or kept != below:
                raise ValueError(f"stack push {self.to_list()} must keep the old top and fill an empty cell")
            effect = StackEffect(EdgeKind.PUSH, below, pushed)
        else:
            (below, top), (kept, erased) = self.before, self.after
            if erased != BLANK or kept != below:
                raise ValueError(f"stack pop {self.to_list()} must keep the exposed symbol and erase the top")
            effect = StackEffect(EdgeKind.POP, top, below)

        if effect.kind is EdgeKind.PUSH and effect.after in (BOTTOM, ANY):
            raise ValueError(f"stack triple {self.to_list()} must push a concrete symbol other than {BOTTOM}")
        if effect.kind is EdgeKind.POP and effect.before in (BOTTOM, ANY):
            raise ValueError(f"stack triple {self.to_list()} must pop a concrete symbol other than {BOTTOM}")
        return effect


class Transition(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    source: str = Field(alias="from")
    target: str = Field(alias="to")
    stack: Triple
    tapes: tuple[Triple, ...]

    def inverse(self) -> Transition:
        """Swap endpoints and invert every triple."""
        return Transition(
            source=self.target,
            target=self.source,
            stack=self.stack.inverse(),
            tapes=tuple(t.inverse() for t in self.tapes),
        )

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "from": self.source,
            "to": self.target,
            "stack": self.stack.to_list(),
            "tapes": [t.to_list() for t in self.tapes],
        }


def inverse_transition(transition: Transition) -> Transition:
    return transition.inverse()


class AuxPdaSpec(BaseModel):
    """Validated machine description."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    states: tuple[str, ...]
    initial: str
    finals: tuple[str, ...]
    input_alphabet: tuple[str, ...] = Field(alias="inputAlphabet")
    stack_alphabet: tuple[str, ...] = Field(alias="stackAlphabet")
    work_alphabet: tuple[str, ...] = Field(default=(BLANK,), alias="workAlphabet")
    work_tape_length: int = Field(default=1, ge=1, le=6, alias="workTapeLength")
    transitions: tuple[Transition, ...] = ()

    @model_validator(mode="after")
    def _check(self) -> Self:
        known = set(self.states)
        if HALT_STATE in known:
            raise ValueError(f"state name {HALT_STATE!r} is reserved")
        if self.initial not in known:
            raise ValueError(f"initial state {self.initial!r} is not a declared state")
        for state in self.finals:
            if state not in known:
                raise ValueError(f"final state {state!r} is not a declared state")
        if BOTTOM not in self.stack_alphabet:
            raise ValueError(f"stack alphabet must contain the bottom marker {BOTTOM!r}")
        if BLANK not in self.work_alphabet:
            raise ValueError(f"work alphabet must contain the blank {BLANK!r}")
        reserved = {LEFT_END, RIGHT_END, ANY}
        if reserved & set(self.input_alphabet):
            raise ValueError("input alphabet may not use '<', '>' or '*'")

        stack_symbols = set(self.stack_alphabet) | {ANY, BLANK}
        input_symbols = set(self.input_alphabet) | reserved
        work_symbols = set(self.work_alphabet) | {ANY}
        for index, transition in enumerate(self.transitions):
            where = f"transition {index} ({transition.source} -> {transition.target})"
            if transition.source not in known or transition.target not in known:
                raise ValueError(f"{where}: unknown state")
            if len(transition.tapes) != 2:
                raise ValueError(f"{where}: expected an input triple and a work triple, got {len(transition.tapes)}")
            try:
                transition.stack.stack_effect()
            except ValueError as e:
                raise ValueError(f"{where}: {e}") from None
            if not set(transition.stack.before + transition.stack.after) <= stack_symbols:
                raise ValueError(f"{where}: stack triple uses an unknown symbol")
            input_triple, work_triple = transition.tapes
            if any(tape.move != 0 and len(tape.before) != 2 for tape in transition.tapes):
                raise ValueError(f"{where}: a moving tape triple takes two symbols per side")
            if not set(input_triple.before + input_triple.after) <= input_symbols:
                raise ValueError(f"{where}: input triple uses an unknown symbol")
            if input_triple.before != input_triple.after:
                raise ValueError(f"{where}: the input tape is read-only")
            if not set(work_triple.before + work_triple.after) <= work_symbols:
                raise ValueError(f"{where}: work triple uses an unknown symbol")
            if work_triple.move == 0 and (work_triple.before[0] == ANY) != (work_triple.after[0] == ANY):
                raise ValueError(f"{where}: '*' must be kept in place")
        return self

    @property
    def is_symmetric(self) -> bool:
        own = set(self.transitions)
        return all(t.inverse() in own for t in self.transitions)

    def with_transitions(self, transitions: tuple[Transition, ...]) -> AuxPdaSpec:
        return self.model_copy(update={"transitions": transitions})

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "states": list(self.states),
            "initial": self.initial,
            "finals": list(self.finals),
            "inputAlphabet": list(self.input_alphabet),
            "stackAlphabet": list(self.stack_alphabet),
            "workAlphabet": list(self.work_alphabet),
            "workTapeLength": self.work_tape_length,
            "transitions": [t.to_json_dict() for t in self.transitions],
        }


def symmetric_closure(machine: AuxPdaSpec) -> AuxPdaSpec:
    """Transitions plus their inverses, original order first, duplicates dropped."""
    merged: dict[Transition, None] = dict.fromkeys(machine.transitions)
    for transition in machine.transitions:
        merged.setdefault(transition.inverse(), None)
    return machine.with_transitions(tuple(merged))


def parse_machine(text: str) -> AuxPdaSpec:
    """Load a JSON machine description.

    Raises:
        MachineError: the JSON is malformed or describes an invalid machine
    """
    try:
        return AuxPdaSpec.model_validate_json(text)
    except ValidationError as e:
        details = "; ".join(str(err["msg"]) for err in e.errors())
        raise MachineError(f"invalid machine description: {details}", "INVALID_MACHINE") from None
