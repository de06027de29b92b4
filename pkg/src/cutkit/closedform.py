"""Constant-time Grundy values for the solved families and for certified sequences.

Heap sizes are split as ``n = p*q + r`` with ``0 < r <= p`` (not ``0 <= r``):
heap 1 is terminal, so remainders run over ``1..p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import PrefixTooShort
from .ruleset import Family, FamilyClass


@dataclass(frozen=True)
class DivisionDecomposition:
    n: int
    p: int
    q: int
    r: int


def decompose(n: int, p: int) -> DivisionDecomposition:
    if n < 1 or p < 1:
        raise ValueError(f"decompose needs n >= 1 and p >= 1, got n={n}, p={p}")
    q, r = divmod(n - 1, p)
    return DivisionDecomposition(n, p, q, r + 1)


def closed_form(family: FamilyClass, n: int) -> Optional[int]:
    """``G(n)`` for a solved family, or ``None`` when the family has no formula."""
    if n < 1:
        raise ValueError(f"heap sizes start at 1, got {n}")
    tag = family.tag
    if tag is Family.ALL_ODD_WITH_ONE:
        return 0 if n % 2 else 1
    if tag is Family.MIN_AT_LEAST_TWO:
        return decompose(n, family.param).q
    if tag is Family.CONTAINS_ONE_TWO_THREE:
        return n - 1
    if tag is Family.ONE_THREE_TWO_K:
        d = decompose(n, 2 * family.param)
        return 2 * d.q + 1 - d.r % 2
    return None


def extend(prefix: Sequence[int], p: int, s: int, n: int) -> int:
    """``G(n) = s*q + G(r)`` from the first period ``prefix[0:p]`` (``prefix[0]`` is ``G(1)``)."""
    if len(prefix) < p:
        raise PrefixTooShort(f"need {p} prefix values, got {len(prefix)}")
    d = decompose(n, p)
    return s * d.q + int(prefix[d.r - 1])
