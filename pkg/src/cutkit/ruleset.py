"""Cut-sets: parsing, membership, family classification and code conversion.

A ruleset ``C`` lists the allowed cut-numbers.  A ``c``-cut splits one heap of
size ``n > c`` into ``c + 1`` non-empty heaps.  Two infinite tails are
supported: every integer from ``t`` on (``all>=t``) and every odd integer from
``t`` on (``odd>=t``).
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    CutTooLarge,
    EmptyRuleset,
    InfiniteRuleset,
    MalformedText,
    NonPositiveCut,
    TailOverlap,
)

MAX_CUT = 10**6


class TailKind(str, enum.Enum):
    ALL = "all"
    ODD = "odd"


@dataclass(frozen=True)
class Tail:
    kind: TailKind
    start: int

    @property
    def first(self) -> int:
        """Smallest cut-number contained in the tail."""
        if self.kind is TailKind.ODD and self.start % 2 == 0:
            return self.start + 1
        return self.start

    def __contains__(self, c: int) -> bool:
        if c < self.start:
            return False
        return self.kind is TailKind.ALL or c % 2 == 1

    def __str__(self) -> str:
        return f"{self.kind.value}>={self.start}"


@dataclass(frozen=True)
class RulesetSpec:
    base: tuple[int, ...]
    tail: Optional[Tail] = None

    def __post_init__(self) -> None:
        if not self.base and self.tail is None:
            raise EmptyRuleset("a ruleset needs at least one cut-number")
        for c in self.base:
            if c < 1:
                raise NonPositiveCut(f"cut-numbers must be positive, got {c}")
            if c > MAX_CUT:
                raise CutTooLarge(f"cut-number {c} exceeds the supported maximum {MAX_CUT}")
        if any(a >= b for a, b in zip(self.base, self.base[1:])):
            raise MalformedText("base cut-numbers must be strictly increasing")
        if self.tail is not None:
            if self.tail.start < 1:
                raise NonPositiveCut(f"tail start must be positive, got {self.tail.start}")
            if self.tail.start > MAX_CUT:
                raise CutTooLarge(f"tail start {self.tail.start} exceeds {MAX_CUT}")
            if self.base and self.base[-1] >= self.tail.start:
                raise TailOverlap(
                    f"base element {self.base[-1]} is not below tail start {self.tail.start}"
                )

    @classmethod
    def of(cls, cuts: Iterable[int], tail: Optional[Tail] = None) -> "RulesetSpec":
        """Build a spec from any iterable of cut-numbers (sorted, deduplicated)."""
        return cls(tuple(sorted(set(cuts))), tail)

    @property
    def is_finite(self) -> bool:
        return self.tail is None

    @property
    def min_cut(self) -> int:
        if self.base:
            return self.base[0]
        return self.tail.first

    @property
    def max_cut(self) -> int:
        if self.tail is not None:
            raise InfiniteRuleset(f"{self} has no largest cut-number")
        return self.base[-1]

    def __contains__(self, c: object) -> bool:
        if not isinstance(c, int):
            return False
        return c in self.base or (self.tail is not None and c in self.tail)

    def __str__(self) -> str:
        parts = [str(c) for c in self.base]
        if self.tail is not None:
            parts.append(str(self.tail))
        return ",".join(parts)

    def cuts_upto(self, bound: int) -> list[int]:
        """All cut-numbers ``c <= bound``, ascending."""
        out = [c for c in self.base if c <= bound]
        if self.tail is not None:
            step = 2 if self.tail.kind is TailKind.ODD else 1
            out.extend(range(self.tail.first, bound + 1, step))
        return out


_TOKEN_RE = re.compile(r"^(?:(all|odd)>=)?(-?\d+)$")


def parse_ruleset(text: str) -> RulesetSpec:
    """Parse ``"1,2"``, ``"1,odd>=3"`` or ``"all>=4"`` into a spec.

    Explicit cut-numbers are sorted and deduplicated; the tail, if any, must
    be the last token.
    """
    tokens = [tok.strip() for tok in text.replace(" ", "").split(",")]
    if tokens == [""]:
        raise EmptyRuleset("empty ruleset text")
    base: list[int] = []
    tail: Optional[Tail] = None
    for i, tok in enumerate(tokens):
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise MalformedText(f"cannot parse token {tok!r} in {text!r}")
        kind, num = m.group(1), int(m.group(2))
        if kind is not None:
            if i != len(tokens) - 1:
                raise MalformedText("a tail pattern must be the last token")
            tail = Tail(TailKind(kind), num)
        else:
            if num < 1:
                raise NonPositiveCut(f"cut-numbers must be positive, got {num}")
            base.append(num)
    return RulesetSpec.of(base, tail)


def materialize_cuts(spec: RulesetSpec, n: int) -> list[int]:
    """Cut-numbers usable on a heap of size ``n`` (those with ``c <= n - 1``)."""
    return spec.cuts_upto(n - 1)


class Family(str, enum.Enum):
    ALL_ODD_WITH_ONE = "AllOddWithOne"
    CONTAINS_ONE_TWO_THREE = "ContainsOneTwoThree"
    ONE_THREE_TWO_K = "OneThreeTwoK"
    ONE_EVEN_C = "OneEvenC"
    MIN_AT_LEAST_TWO = "MinAtLeastTwo"
    GENERAL = "General"


@dataclass(frozen=True)
class FamilyClass:
    tag: Family
    param: Optional[int] = None

    def __str__(self) -> str:
        if self.param is None:
            return self.tag.value
        return f"{self.tag.value}({self.param})"


def classify(spec: RulesetSpec) -> FamilyClass:
    """Return the solved family ``spec`` belongs to.

    Precedence: all-odd with 1, then {1,2,3} subset, then {1,3,2k} with
    k >= 2, then {1,c} with even c >= 4, then min >= 2, otherwise General.
    """
    tail = spec.tail
    if 1 in spec:
        all_odd = all(c % 2 == 1 for c in spec.base) and (
            tail is None or tail.kind is TailKind.ODD
        )
        if all_odd:
            return FamilyClass(Family.ALL_ODD_WITH_ONE)
        if 2 in spec and 3 in spec:
            return FamilyClass(Family.CONTAINS_ONE_TWO_THREE)
        if tail is None:
            base = spec.base
            if len(base) == 3 and base[:2] == (1, 3) and base[2] % 2 == 0 and base[2] >= 4:
                return FamilyClass(Family.ONE_THREE_TWO_K, base[2] // 2)
            if len(base) == 2 and base[1] % 2 == 0 and base[1] >= 4:
                return FamilyClass(Family.ONE_EVEN_C, base[1])
        return FamilyClass(Family.GENERAL)
    return FamilyClass(Family.MIN_AT_LEAST_TWO, spec.min_cut)


@dataclass(frozen=True)
class TakeBreakCode:
    """Take-and-break code ``d0.d1d2...``; digits are plain integers.

    The CUT game on a heap of ``n`` plays like this code on a heap of
    ``n - 1``: cutting a path of ``n`` beans at ``c`` of its ``n - 1`` gaps is
    removing ``c`` tokens from the line of gaps and leaving at most ``c + 1``
    heaps.
    """

    d0: int
    digits: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.d0}." + ",".join(str(d) for d in self.digits)

    def hexadecimal(self) -> Optional[str]:
        """Classic one-character-per-digit form, when every digit is below 16."""
        if self.d0 > 15 or any(d > 15 for d in self.digits):
            return None
        return f"{self.d0:X}." + "".join(f"{d:X}" for d in self.digits)

    @classmethod
    def parse(cls, text: str) -> "TakeBreakCode":
        head, sep, rest = text.partition(".")
        if not sep or not head.isdigit():
            raise MalformedText(f"not a take-and-break code: {text!r}")
        try:
            digits = tuple(int(tok) for tok in rest.split(",")) if rest else ()
        except ValueError as exc:
            raise MalformedText(f"not a take-and-break code: {text!r}") from exc
        if any(d < 0 for d in digits):
            raise MalformedText(f"negative digit in {text!r}")
        return cls(int(head), digits)


def to_take_and_break(spec: RulesetSpec) -> TakeBreakCode:
    if not spec.is_finite:
        raise InfiniteRuleset("only finite rulesets have a finite take-and-break code")
    digits = tuple((1 << (c + 2)) - 1 if c in spec.base else 0 for c in range(1, spec.max_cut + 1))
    return TakeBreakCode(0, digits)


def from_take_and_break(code: TakeBreakCode) -> RulesetSpec:
    """Inverse of :func:`to_take_and_break` on its image; anything else is rejected."""
    if code.d0 != 0 or not code.digits or code.digits[-1] == 0:
        raise MalformedText(f"{code} is not the code of a CUT ruleset")
    cuts = []
    for c, d in enumerate(code.digits, start=1):
        if d == (1 << (c + 2)) - 1:
            cuts.append(c)
        elif d != 0:
            raise MalformedText(f"digit {d} at position {c} is not a CUT digit")
    return RulesetSpec(tuple(cuts))
