"""Disjunctive sums of heaps: value, winner and a winning move."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .engine import GrundyTable, reachable
from .errors import HeapBeyondTable, MalformedText
from .ruleset import materialize_cuts


@dataclass(frozen=True)
class Position:
    """Sorted multiset of heap sizes; the empty position is terminal."""

    heaps: tuple[int, ...]

    def __init__(self, heaps: Iterable[int] = ()) -> None:
        heaps = tuple(sorted(int(h) for h in heaps))
        if any(h < 1 for h in heaps):
            raise ValueError(f"heap sizes must be positive: {heaps}")
        object.__setattr__(self, "heaps", heaps)

    @classmethod
    def parse(cls, text: str) -> "Position":
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise MalformedText(f"cannot parse position {text!r}") from exc

    def apply(self, move: "Move") -> "Position":
        rest = self.heaps[: move.heap_index] + self.heaps[move.heap_index + 1 :]
        return Position(rest + tuple(move.parts))

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.heaps)


@dataclass(frozen=True)
class Move:
    heap_index: int
    c: int
    parts: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return f"split {self.size} -> " + "+".join(str(p) for p in self.parts)


class Outcome(str, enum.Enum):
    PLAYER_TO_MOVE_WINS = "PlayerToMoveWins"
    PREVIOUS_PLAYER_WINS = "PreviousPlayerWins"


def _check(pos: Position, table: GrundyTable) -> None:
    for h in pos.heaps:
        if h > table.N:
            raise HeapBeyondTable(f"heap {h} exceeds the table length {table.N}")


def position_value(pos: Position, table: GrundyTable) -> int:
    _check(pos, table)
    value = 0
    for h in pos.heaps:
        value ^= int(table.values[h])
    return value


def outcome(pos: Position, table: GrundyTable) -> Outcome:
    if position_value(pos, table) == 0:
        return Outcome.PREVIOUS_PLAYER_WINS
    return Outcome.PLAYER_TO_MOVE_WINS


def _realize(table: GrundyTable, n: int, c: int, target: int) -> tuple[int, ...]:
    """Parts of a ``c``-cut of heap ``n`` whose nim-sum is ``target`` (known to exist)."""
    parts = []
    for level in range(c, 0, -1):
        for a in range(1, n - level + 1):
            rest = target ^ int(table.values[a])
            if level == 1:
                hit = int(table.values[n - a]) == rest
            else:
                hit = rest in reachable(table, n - a, level - 1)
            if hit:
                parts.append(a)
                n -= a
                target = rest
                break
        else:
            raise AssertionError(f"value {target} not realizable from heap {n} with a {level}-cut")
    parts.append(n)
    return tuple(parts)


def best_move(pos: Position, table: GrundyTable) -> Optional[Move]:
    """A move to a position of value 0, or ``None`` from a zero position.

    Heaps are scanned in sorted order, cut-numbers ascending, first parts
    ascending; the first hit is returned.
    """
    total = position_value(pos, table)
    if total == 0:
        return None
    for index, h in enumerate(pos.heaps):
        target = total ^ int(table.values[h])
        for c in materialize_cuts(table.spec, h):
            if target in reachable(table, h, c):
                return Move(index, c, _realize(table, h, c, target))
    return None
