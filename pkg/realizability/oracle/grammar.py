"""
Realizable label strings
========================

A label string alternates vertex labels and edge labels and starts and ends
with a vertex label: ``α1 push α2 pop α1``. Realizable strings are generated
by

    α_i
    α_i ε α_i
    α_i push S pop α_i        (S realizable)
    α_i pop S push α_i        (S realizable; symmetric-gap grammars only)
    α_i S1 α_i S2 α_i         (α_i S1 α_i and α_i S2 α_i realizable)

Single-label grammars accept only strings whose vertex labels are all α1.
"""

from __future__ import annotations

import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from realizability.exceptions import LabelStringError
from realizability.models import EdgeKind, GrammarVariant

Token = int | EdgeKind

_LABEL_TOKEN = re.compile(r"^(?:α|a|alpha)?(\d+)$")


@dataclass(frozen=True)
class LabelString:
    """Alternating string: ``len(edges) == len(vertices) - 1``."""

    vertices: tuple[int, ...]
    edges: tuple[EdgeKind, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise LabelStringError("label string needs at least one vertex label")
        if len(self.edges) != len(self.vertices) - 1:
            raise LabelStringError(
                f"{len(self.vertices)} vertex labels need {len(self.vertices) - 1} edge labels, got {len(self.edges)}"
            )

    @classmethod
    def from_tokens(cls, tokens: Sequence[Token]) -> LabelString:
        """Split an alternating token sequence, rejecting broken alternation."""
        if not tokens:
            raise LabelStringError("empty label string")
        vertices: list[int] = []
        edges: list[EdgeKind] = []
        for position, token in enumerate(tokens):
            expect_vertex = position % 2 == 0
            if isinstance(token, EdgeKind):
                if expect_vertex:
                    raise LabelStringError(f"token {position}: expected a vertex label, got {token.value}")
                edges.append(token)
            else:
                if not expect_vertex:
                    raise LabelStringError(f"token {position}: expected an edge label, got α{token}")
                vertices.append(token)
        if len(tokens) % 2 == 0:
            raise LabelStringError("label string must end with a vertex label")
        return cls(tuple(vertices), tuple(edges))

    @classmethod
    def parse(cls, text: str) -> LabelString:
        """Parse ``α1 push α2 pop α1`` (``a1``, ``alpha1`` and ``ε`` also accepted)."""
        tokens: list[Token] = []
        for word in text.split():
            lowered = word.lower()
            if lowered in ("ε", "eps", "epsilon"):
                tokens.append(EdgeKind.EPS)
            elif lowered in ("push", "pop"):
                tokens.append(EdgeKind(lowered))
            elif match := _LABEL_TOKEN.match(lowered):
                tokens.append(int(match.group(1)))
            else:
                raise LabelStringError(f"unknown token {word!r}")
        return cls.from_tokens(tokens)

    def tokens(self) -> tuple[Token, ...]:
        out: list[Token] = [self.vertices[0]]
        for edge, vertex in zip(self.edges, self.vertices[1:], strict=True):
            out.extend((edge, vertex))
        return tuple(out)

    def __str__(self) -> str:
        return " ".join(
            f"α{t}" if isinstance(t, int) else ("ε" if t is EdgeKind.EPS else t.value) for t in self.tokens()
        )


def _coerce(string: LabelString | Sequence[Token] | str) -> LabelString:
    if isinstance(string, LabelString):
        return string
    if isinstance(string, str):
        return LabelString.parse(string)
    return LabelString.from_tokens(string)


def is_realizable_string(string: LabelString | Sequence[Token] | str, grammar: GrammarVariant) -> bool:
    """CYK-style interval recognition in O(m^3) for m vertex tokens.

    ``table[i][j]`` holds when vertex tokens i..j form a realizable string.
    """
    s = _coerce(string)
    labels, edges = s.vertices, s.edges
    if grammar.single_label and any(label != 1 for label in labels):
        return False

    m = len(labels)
    table = [[False] * m for _ in range(m)]
    for i in range(m):
        table[i][i] = True

    for span in range(1, m):
        for i in range(m - span):
            j = i + span
            if labels[i] != labels[j]:
                continue
            if span == 1:
                table[i][j] = edges[i] is EdgeKind.EPS
                continue
            first, last = edges[i], edges[j - 1]
            wrapped = table[i + 1][j - 1] and (
                (first is EdgeKind.PUSH and last is EdgeKind.POP)
                or (grammar.allows_pop_push and first is EdgeKind.POP and last is EdgeKind.PUSH)
            )
            table[i][j] = wrapped or any(table[i][mid] and table[mid][j] for mid in range(i + 1, j))
    return table[0][m - 1]


def derive_strings(max_edges: int, k: int, grammar: GrammarVariant) -> frozenset[tuple[Token, ...]]:
    """Every realizable token string with at most ``max_edges`` edge tokens.

    Built bottom-up by applying the production rules until no new string
    fits the size limit.
    """
    label_range = [1] if grammar.single_label else list(range(1, k + 1))
    limit = 2 * max_edges + 1
    known: set[tuple[Token, ...]] = {(label,) for label in label_range}
    if max_edges >= 1:
        known.update((label, EdgeKind.EPS, label) for label in label_range)

    wrappers = [(EdgeKind.PUSH, EdgeKind.POP)]
    if grammar.allows_pop_push:
        wrappers.append((EdgeKind.POP, EdgeKind.PUSH))

    changed = True
    while changed:
        changed = False
        snapshot = list(known)
        fresh: set[tuple[Token, ...]] = set()
        for inner in snapshot:
            if len(inner) + 4 > limit:
                continue
            for label, (opening, closing) in product(label_range, wrappers):
                fresh.add((label, opening, *inner, closing, label))
        for left, right in product(snapshot, repeat=2):
            if left[-1] == right[0] and left[0] == right[-1] and len(left) + len(right) - 1 <= limit:
                fresh.add(left + right[1:])
        new = fresh - known
        if new:
            known |= new
            changed = True
    return frozenset(known)


def all_label_strings(max_edges: int, k: int) -> Iterator[tuple[Token, ...]]:
    """Every alternating token string with at most ``max_edges`` edges over labels 1..k."""
    kinds = list(EdgeKind)
    for edge_count in range(max_edges + 1):
        for labels in product(range(1, k + 1), repeat=edge_count + 1):
            for edges in product(kinds, repeat=edge_count):
                yield LabelString(labels, edges).tokens()
