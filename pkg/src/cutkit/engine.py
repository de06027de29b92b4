"""Grundy tables for CUT rulesets.

``compute_table`` runs a dynamic program over reachable value sets.  For a
heap of size ``m`` and cut-number ``c``, ``R_c(m)`` is the set of nim-sums of
the Grundy values over every split of ``m`` into ``c + 1`` non-empty parts;
it obeys

    R_0(m) = {G(m)}
    R_c(m) = union over a = 1..m-c of  G(a) ^ R_{c-1}(m - a)

so every level is built from the level below on strictly smaller heaps.  The
tails ``all>=t`` and ``odd>=t`` use the same recursion on unions of levels
(``T_k = R_k | R_{k+1} | ...`` and ``P_k = R_k | R_{k+2} | ...``), closed by
``T_0(m) = {G(m)} | T_1(m)`` and ``P_0(m) = {G(m)} | P_2(m)``.

``brute_grundy`` enumerates partitions directly and is kept independent of
the DP as a test oracle.
"""
from __future__ import annotations

import functools
import operator
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

import numpy as np

from . import kernels
from .errors import (
    CapacityExceeded,
    NotApplicable,
    OracleScaleExceeded,
    OutOfRange,
)
from .ruleset import RulesetSpec, TailKind, materialize_cuts

MAX_HEAP = 200_000
ORACLE_MAX_HEAP = 64


class ValueSet:
    """Set of non-negative integers stored as the bits of one Python int."""

    __slots__ = ("bits", "_mex")

    def __init__(self, values: Iterable[int] = ()) -> None:
        bits = 0
        for v in values:
            if v < 0:
                raise ValueError(f"value sets hold non-negative integers, got {v}")
            bits |= 1 << v
        self.bits = bits
        self._mex: Optional[int] = None

    @classmethod
    def from_mask(cls, bits: int) -> "ValueSet":
        out = cls()
        out.bits = bits
        return out

    @classmethod
    def from_words(cls, words: np.ndarray) -> "ValueSet":
        data = np.ascontiguousarray(words, dtype="<u8").tobytes()
        return cls.from_mask(int.from_bytes(data, "little"))

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and v >= 0 and (self.bits >> int(v)) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits, v = self.bits, 0
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            yield v
            bits ^= low

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ValueSet):
            return self.bits == other.bits
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __or__(self, other: "ValueSet") -> "ValueSet":
        return ValueSet.from_mask(self.bits | other.bits)

    def __repr__(self) -> str:
        return f"ValueSet({sorted(self)})"

    def mex(self) -> int:
        if self._mex is None:
            self._mex = ((self.bits + 1) & ~self.bits).bit_length() - 1
        return self._mex


def mex(values: Iterable[int]) -> int:
    """Smallest non-negative integer not in ``values``."""
    if isinstance(values, ValueSet):
        return values.mex()
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


def nim_sum(values: Iterable[int]) -> int:
    return functools.reduce(operator.xor, (int(v) for v in values), 0)


def _mex_words(acc: np.ndarray) -> int:
    free = np.flatnonzero(~acc)
    if free.size == 0:
        return 64 * acc.shape[0]
    j = int(free[0])
    w = int(~acc[j])
    return 64 * j + (w & -w).bit_length() - 1


@dataclass(frozen=True, eq=False)
class GrundyTable:
    """Grundy values ``G(1..N)`` of one ruleset plus the reachable-set rows.

    ``values[n]`` is ``G(n)``; index 0 is unused.  ``rows`` maps a chain key to
    an ``(N + 1, words)`` bit matrix: ``("exact", c)`` holds ``R_c`` and
    ``("tail", k)`` the ``k``-th level of the tail chain.
    """

    spec: RulesetSpec
    values: np.ndarray
    rows: dict = field(default_factory=dict, repr=False)
    backend: str = "python"
    option_sets: Optional[dict] = field(default=None, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def N(self) -> int:
        return len(self.values) - 1

    @property
    def words(self) -> int:
        if self.rows:
            return next(iter(self.rows.values())).shape[1]
        top = int(self.values.max()) if self.N else 0
        return _words_for(top)

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.N:
            raise OutOfRange(f"heap {n} is outside 1..{self.N}")
        return int(self.values[n])

    def __len__(self) -> int:
        return self.N

    def sequence(self) -> list[int]:
        return [int(v) for v in self.values[1:]]

    def exact_rows(self, c: int) -> np.ndarray:
        """``R_c(m)`` for every ``m <= N`` as a bit matrix, extending the chain on demand."""
        key = ("exact", c)
        if key in self.rows:
            return self.rows[key]
        if key in self._cache:
            return self._cache[key]
        kern = kernels.load(self.backend)
        words = self.words
        if c == 1:
            out = np.zeros((self.N + 1, words), dtype=np.uint64)
            for m in range(2, self.N + 1):
                kern.pair_union(self.values, m, out[m])
        else:
            prev = self.exact_rows(c - 1)
            out = np.zeros((self.N + 1, words), dtype=np.uint64)
            for m in range(c + 1, self.N + 1):
                kern.xor_union(prev, self.values, m, m - c, out[m])
        self._cache[key] = out
        return out

    def reach2plus(self, n: int) -> ValueSet:
        return reach2plus(self, n)


def _words_for(max_value: int) -> int:
    """Power-of-two word count whose bit range is closed under XOR of values <= max_value."""
    bits = max(64, 1 << max(0, int(max_value).bit_length()))
    return bits // 64


def _tail_levels(spec: RulesetSpec) -> tuple[int, int, int]:
    """(chain depth, level used for the mex, level holding only cuts >= 2)."""
    tail = spec.tail
    if tail.kind is TailKind.ALL:
        two_plus = max(tail.first, 2)
        return max(tail.first, 2), tail.first, two_plus
    two_plus = max(tail.first, 3)
    return max(tail.first, 3), tail.first, two_plus


def compute_table(
    spec: RulesetSpec, N: int, threads: int = 1, backend: Optional[str] = None
) -> GrundyTable:
    """Grundy values ``G(1..N)`` by the reachable-set DP.

    ``threads`` splits each row update across workers by word range; the
    result is bit-identical for every thread count.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    if N > MAX_HEAP:
        raise CapacityExceeded(f"N={N} exceeds the configured limit {MAX_HEAP}")
    if threads < 1:
        raise ValueError("threads must be positive")
    kern = kernels.load(backend) if backend else kernels.active

    values = np.zeros(N + 1, dtype=np.int64)
    words = 1
    exact_depth = spec.base[-1] if spec.base else 0
    exact = [None] + [np.zeros((N + 1, words), dtype=np.uint64) for _ in range(exact_depth)]
    if spec.tail is not None:
        tail_depth, tail_level, _ = _tail_levels(spec)
        closer = 1 if spec.tail.kind is TailKind.ALL else 2
        tail = [np.zeros((N + 1, words), dtype=np.uint64) for _ in range(tail_depth + 1)]
    else:
        tail_depth = tail_level = closer = 0
        tail = []
    base = spec.base

    top = 0
    for m in range(1, N + 1):
        for c in range(1, min(exact_depth, m - 1) + 1):
            if c == 1:
                kern.pair_union(values, m, exact[1][m])
            else:
                kern.xor_union(exact[c - 1], values, m, m - c, exact[c][m], threads)
        for k in range(1, min(tail_depth, m - 1) + 1):
            kern.xor_union(tail[k - 1], values, m, m - k, tail[k][m], threads)

        acc = np.zeros(words, dtype=np.uint64)
        for c in base:
            if c > m - 1:
                break
            acc |= exact[c][m]
        if tail and tail_level <= m - 1:
            acc |= tail[tail_level][m]
        g = _mex_words(acc)
        values[m] = g

        if g > top:
            top = g
            need = _words_for(top)
            if need > words:
                exact = [None] + [_widen(r, need) for r in exact[1:]]
                tail = [_widen(r, need) for r in tail]
                words = need
        if tail:
            tail[0][m] = tail[closer][m]
            tail[0][m, g >> 6] |= np.uint64(1) << np.uint64(g & 63)

    rows = {("exact", c): exact[c] for c in range(1, exact_depth + 1)}
    rows.update({("tail", k): tail[k] for k in range(len(tail))})
    for arr in rows.values():
        arr.setflags(write=False)
    values.setflags(write=False)
    return GrundyTable(spec, values, rows, backend=kern.BACKEND)


def _widen(rows: np.ndarray, words: int) -> np.ndarray:
    out = np.zeros((rows.shape[0], words), dtype=np.uint64)
    out[:, : rows.shape[1]] = rows
    return out


def partitions(n: int, parts: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of ``parts`` integers ``>= smallest`` summing to ``n``."""
    if parts == 1:
        if n >= smallest:
            yield (n,)
        return
    for first in range(smallest, n // parts + 1):
        for rest in partitions(n - first, parts - 1, first):
            yield (first,) + rest


def iter_options(spec: RulesetSpec, n: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Every option of a heap of size ``n`` as ``(c, parts)`` with sorted parts."""
    for c in materialize_cuts(spec, n):
        for parts in partitions(n, c + 1):
            yield c, parts


def brute_grundy(spec: RulesetSpec, N: int) -> GrundyTable:
    """Grundy values by explicit enumeration of every option (oracle scale only)."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if N > ORACLE_MAX_HEAP:
        raise OracleScaleExceeded(f"brute force is limited to N <= {ORACLE_MAX_HEAP}")
    g = [0] * (N + 1)
    option_sets: dict = {}
    for n in range(1, N + 1):
        per_cut: dict = {}
        for c, parts in iter_options(spec, n):
            value = 0
            for part in parts:
                value ^= g[part]
            per_cut.setdefault(c, set()).add(value)
        for c, vals in per_cut.items():
            option_sets[(c, n)] = frozenset(vals)
        g[n] = mex(set().union(*per_cut.values()))
    values = np.array(g, dtype=np.int64)
    values.setflags(write=False)
    return GrundyTable(spec, values, {}, backend="brute", option_sets=option_sets)


def reachable(table: GrundyTable, n: int, c: int) -> ValueSet:
    """``R_c(n)``: nim-sums over all splits of heap ``n`` into ``c + 1`` parts."""
    if not 1 <= n <= table.N:
        raise OutOfRange(f"heap {n} is outside 1..{table.N}")
    if c < 1:
        raise OutOfRange(f"cut-number must be positive, got {c}")
    if c > n - 1:
        return ValueSet()
    if table.option_sets is not None and (c, n) in table.option_sets:
        return ValueSet(table.option_sets[(c, n)])
    return ValueSet.from_words(table.exact_rows(c)[n])


def reach2plus(table: GrundyTable, n: int) -> ValueSet:
    """Values reachable from heap ``n`` with some cut ``c >= 2`` of the ruleset."""
    if not 1 <= n <= table.N:
        raise OutOfRange(f"heap {n} is outside 1..{table.N}")
    spec = table.spec
    out = ValueSet()
    if table.option_sets is not None:
        bits = set()
        for c in materialize_cuts(spec, n):
            if c >= 2:
                bits |= table.option_sets.get((c, n), frozenset())
        return ValueSet(bits)
    for c in spec.base:
        if c >= 2 and c <= n - 1:
            out = out | ValueSet.from_words(table.exact_rows(c)[n])
    if spec.tail is not None:
        _, _, level = _tail_levels(spec)
        out = out | ValueSet.from_words(table.rows[("tail", level)][n])
    return out


@dataclass(frozen=True)
class ResidueDistinctnessReport:
    even_cut: int
    max_n: int
    violations: list

    @property
    def holds(self) -> bool:
        return not self.violations


def smallest_even_cut(spec: RulesetSpec) -> Optional[int]:
    evens = [c for c in spec.base if c % 2 == 0]
    if evens:
        return evens[0]
    if spec.tail is not None and spec.tail.kind is TailKind.ALL:
        return spec.tail.first + (spec.tail.first % 2)
    return None


def residue_distinctness(table: GrundyTable) -> ResidueDistinctnessReport:
    """Look for equal Grundy values on heaps congruent modulo the smallest even cut."""
    c = smallest_even_cut(table.spec)
    if c is None:
        raise NotApplicable(f"ruleset {table.spec} has no even cut-number")
    violations = []
    for residue in range(1, c + 1):
        first_seen: dict = {}
        for x in range(residue, table.N + 1, c):
            g = int(table.values[x])
            if g in first_seen:
                violations.append((first_seen[g], x))
            else:
                first_seen[g] = x
    violations.sort()
    return ResidueDistinctnessReport(c, table.N, violations)
