"""Periodic and arithmetic-periodic structure of Grundy sequences.

``detect`` fits ``G(n + p) = G(n) + s`` (for ``n > n0``) to a computed prefix.
``ap_test`` runs the arithmetic-periodicity test on the first ``4p`` values:

* AP1  ``G(n + p) = G(n) + s`` for ``n <= 3p``
* AP2  ``{G(1), ..., G(p)} = {0, ..., s - 1}``
* AP3  every heap ``n`` in ``[3p + 1, 4p]`` reaches every value below ``s``
  with some cut ``c >= 2`` of the ruleset

with ``s`` a power of two, ``1 <= s <= p``.  Together with ``max C <= 4p``
these prove the whole sequence is purely arithmetic-periodic.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .engine import GrundyTable, reach2plus
from .errors import (
    InfiniteRuleset,
    NoCandidatePeriod,
    NotApplicableRuleset,
    TableTooShort,
)
from .ruleset import Family, RulesetSpec, classify


class Source(str, enum.Enum):
    DETECTED = "Detected"
    CLOSED_FORM = "ClosedForm"
    CERTIFIED = "Certified"


@dataclass(frozen=True)
class RegularityHypothesis:
    n0: int
    p: int
    s: int
    source: Source = Source.DETECTED

    @property
    def pure(self) -> bool:
        return self.n0 == 0

    @property
    def kind(self) -> str:
        shape = "periodic" if self.s == 0 else "arithmetic-periodic"
        return ("pure " if self.pure else "ultimately ") + shape

    def holds_on(self, values) -> bool:
        """Check ``G(n + p) = G(n) + s`` for every ``n0 < n <= N - p`` of a 1-indexed array."""
        vals = np.asarray(values)
        N = len(vals) - 1
        lo = self.n0 + 1
        if lo > N - self.p:
            return True
        return bool(np.all(vals[lo + self.p : N + 1] - vals[lo : N + 1 - self.p] == self.s))

    def describe(self) -> str:
        return f"{self.kind}: n0={self.n0}, p={self.p}, s={self.s} ({self.source.value})"

    def to_dict(self) -> dict:
        return {"n0": self.n0, "p": self.p, "s": self.s, "kind": self.kind, "source": self.source.value}


def detect(
    table: GrundyTable, max_p: Optional[int] = None, max_n0: Optional[int] = None
) -> Optional[RegularityHypothesis]:
    """Smallest period, then smallest preperiod, consistent with the whole table.

    Defaults are ``max_p = N // 8`` and ``max_n0 = N // 4``.  A hypothesis must
    be checked on at least ``3p`` consecutive heaps after ``n0``.
    """
    N = table.N
    if max_p is None:
        max_p = max(1, N // 8)
    if max_n0 is None:
        max_n0 = N // 4
    if N < 4 * max_p:
        raise TableTooShort(f"detect needs N >= 4*max_p = {4 * max_p}, table has {N}")
    g = table.values
    for p in range(1, max_p + 1):
        diff = g[1 + p : N + 1] - g[1 : N + 1 - p]
        s = int(diff[-1])
        if s < 0:
            continue
        bad = np.flatnonzero(diff != s)
        n0 = int(bad[-1]) + 1 if bad.size else 0
        if n0 > max_n0 or N - p - n0 < 3 * p:
            continue
        return RegularityHypothesis(n0, p, s, Source.DETECTED)
    return None


class AP3Method(str, enum.Enum):
    DIRECT = "Direct"
    PARITY_PAIR = "ParityPair"
    ONE_EVEN_PAIR = "OneEvenPair"


@dataclass(frozen=True)
class APReport:
    ruleset: RulesetSpec
    p: int
    t: int
    ap1: bool
    ap2: bool
    ap3: bool
    ap3_method: AP3Method
    thm_condition: bool
    checked_N: int
    corroborating: tuple = field(default=())
    failure: Optional[str] = None

    @property
    def s(self) -> int:
        return 1 << self.t

    @property
    def proven(self) -> bool:
        return self.ap1 and self.ap2 and self.ap3 and self.thm_condition

    @property
    def verdict(self) -> str:
        return "Proven" if self.proven else f"Failed({self.failure})"

    def to_dict(self) -> dict:
        return {
            "ruleset": str(self.ruleset),
            "p": self.p,
            "t": self.t,
            "s": self.s,
            "ap1": self.ap1,
            "ap2": self.ap2,
            "ap3": self.ap3,
            "ap3_method": self.ap3_method.value,
            "thm_condition": self.thm_condition,
            "verdict": self.verdict,
            "checked_N": self.checked_N,
        }


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def ap1_ap2(table: GrundyTable, p: int) -> Optional[int]:
    """The saltus ``s`` if AP1 and AP2 hold for period ``p``, else ``None``."""
    g = table.values
    if table.N < 4 * p:
        raise TableTooShort(f"AP1 for p={p} needs G(1..{4 * p}), table has {table.N}")
    s = int(g[1 + p] - g[1])
    if not _is_power_of_two(s) or s > p:
        return None
    if not np.all(g[1 + p : 4 * p + 1] - g[1 : 3 * p + 1] == s):
        return None
    if set(int(v) for v in g[1 : p + 1]) != set(range(s)):
        return None
    return s


def ap3_direct(table: GrundyTable, p: int, s: int) -> bool:
    full = (1 << s) - 1
    return all(reach2plus(table, n).bits & full == full for n in range(3 * p + 1, 4 * p + 1))


def ap3_via_parities(spec: RulesetSpec, p: int) -> bool:
    """Cut-numbers of both parities inside ``[2, 2p + 1]`` make AP3 follow from AP1 and AP2."""
    cuts = spec.cuts_upto(2 * p + 1)
    usable = [c for c in cuts if c >= 2]
    return any(c % 2 == 0 for c in usable) and any(c % 2 == 1 for c in usable)


def find_parity_pair(table: GrundyTable, p: int) -> Optional[tuple[int, int]]:
    """Heaps ``x1 > x2``, both ``<= p/2``, of different parity with equal Grundy values."""
    g = table.values
    limit = min(p // 2, table.N)
    for x1 in range(2, limit + 1):
        for x2 in range(1 + x1 % 2, x1, 2):
            if g[x1] == g[x2]:
                return x1, x2
    return None


def ap3_via_pair(spec: RulesetSpec, table: GrundyTable, p: int) -> bool:
    """For ``C = {1, c}`` (``c >= 4`` even, ``c <= p``): AP3 from a parity pair.

    ``p >= 4c + 3`` always suffices, since then ``G(2) = G(2c + 1) = 1`` is
    such a pair.
    """
    family = classify(spec)
    if family.tag is not Family.ONE_EVEN_C:
        raise NotApplicableRuleset(f"{spec} is not of the form {{1, c}} with even c >= 4")
    c = family.param
    if c > p:
        raise NotApplicableRuleset(f"cut {c} exceeds the period {p}")
    if p >= 4 * c + 3:
        return True
    return find_parity_pair(table, p) is not None


def ap_test(
    spec: RulesetSpec, table: GrundyTable, max_p: Optional[int] = None
) -> APReport:
    """Run the AP-test: the smallest period satisfying AP1, AP2 and AP3.

    Periods that pass AP1 and AP2 but fail AP3 are skipped; if every
    candidate up to ``N // 4`` fails, :class:`NoCandidatePeriod` is raised and
    its ``partial`` attribute lists the skipped ``(p, s)`` pairs.
    """
    if not spec.is_finite:
        raise InfiniteRuleset("the AP-test applies to finite rulesets only")
    if table.N < 4:
        raise TableTooShort("the AP-test needs at least 4 values")
    bound = table.N // 4 if max_p is None else min(max_p, table.N // 4)
    partial = []
    for p in range(1, bound + 1):
        s = ap1_ap2(table, p)
        if s is None:
            continue
        if ap3_direct(table, p, s):
            break
        partial.append((p, s))
    else:
        exc = NoCandidatePeriod(
            f"no period p <= {bound} passes AP1, AP2 and AP3 for {spec}"
            + (f" (AP3 failed for {partial})" if partial else "")
        )
        exc.partial = partial
        raise exc

    t = s.bit_length() - 1
    corroborating = []
    if ap3_via_parities(spec, p):
        corroborating.append(AP3Method.PARITY_PAIR)
    family = classify(spec)
    if family.tag is Family.ONE_EVEN_C and family.param <= p and ap3_via_pair(spec, table, p):
        corroborating.append(AP3Method.ONE_EVEN_PAIR)
    thm = spec.max_cut <= 4 * p
    return APReport(
        spec, p, t, True, True, True, AP3Method.DIRECT, thm, table.N,
        tuple(corroborating), None if thm else "MaxCutAbove4p",
    )


def certify(
    spec: RulesetSpec, table: GrundyTable
) -> Optional[tuple[RegularityHypothesis, APReport]]:
    """Certified hypothesis ``(n0=0, p, s)`` when the AP-test proves it, else ``None``."""
    try:
        report = ap_test(spec, table)
    except NoCandidatePeriod:
        return None
    if not report.proven:
        return None
    return RegularityHypothesis(0, report.p, report.s, Source.CERTIFIED), report
