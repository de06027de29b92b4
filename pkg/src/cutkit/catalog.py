"""Reference rulesets with their published Grundy sequences.

``AP_ROWS`` are rulesets whose pure arithmetic-periodicity is certified by the
AP-test; ``SOLVED_ROWS`` are the families with closed forms.  ``run_ap_rows``
and ``run_solved_rows`` recompute every row from scratch.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .engine import compute_table
from .notation import PeriodicNotation, parse_notation
from .regularity import certify, detect
from .ruleset import RulesetSpec, Tail, TailKind


def _unions(base: Iterable[int], extra: Iterable[int], keep: Callable[[frozenset], bool] = lambda k: True):
    extra = sorted(extra)
    out = []
    for r in range(len(extra) + 1):
        for k in itertools.combinations(extra, r):
            if keep(frozenset(k)):
                out.append(RulesetSpec.of(tuple(base) + k))
    return out


def _has_odd_extra(k: frozenset) -> bool:
    return bool(k & {3, 5, 7})


@dataclass(frozen=True)
class CatalogRow:
    label: str
    rulesets: tuple
    notation: str

    @property
    def expected(self) -> PeriodicNotation:
        return parse_notation(self.notation)


AP_ROWS = (
    CatalogRow(
        "{1,4} u K, K in {6,8,10}",
        tuple(_unions((1, 4), (6, 8, 10))),
        "((0,1)^2(2,3)^2,1,4,5,4,(3,2)^2(4,5)^2(6,7)^2) (+8)",
    ),
    CatalogRow(
        "{1,6} u K, K in {8,10}",
        tuple(_unions((1, 6), (8, 10))),
        "((0,1)^3(2,3)^3,1,4,(5,4)^2(3,2)^3(4,5)^3(6,7)^3) (+8)",
    ),
    CatalogRow(
        "{1,8}",
        (RulesetSpec((1, 8)),),
        "((0,1)^4(2,3)^4,1,4,(5,4)^3(3,2)^4(4,5)^4(6,7)^4) (+8)",
    ),
    CatalogRow(
        "{1,10}",
        (RulesetSpec((1, 10)),),
        "((0,1)^5(2,3)^5,1,4,(5,4)^4(3,2)^5(4,5)^5(6,7)^5) (+8)",
    ),
    CatalogRow(
        "{1,4} u K, K in {3,5,6,7,8} with 3, 5 or 7",
        tuple(_unions((1, 4), (3, 5, 6, 7, 8), _has_odd_extra)),
        "(0,1)^2 (+2)",
    ),
    CatalogRow(
        "{1,6} u K, K in {3,5,7,8} with 3, 5 or 7",
        tuple(_unions((1, 6), (3, 5, 7, 8), _has_odd_extra)),
        "(0,1)^3 (+2)",
    ),
    CatalogRow(
        "{1,8} u K, K in {3,5,7} nonempty",
        tuple(_unions((1, 8), (3, 5, 7), bool)),
        "(0,1)^4 (+2)",
    ),
    CatalogRow(
        "{1,2,4} u K, K in {6,7,8}; {1,2,6} u K', K' in {7,8}",
        tuple(_unions((1, 2, 4), (6, 7, 8)) + _unions((1, 2, 6), (7, 8))),
        "(0,1,2,3,1,4,3,2,4,5,6,7) (+8)",
    ),
    CatalogRow(
        "{1,2,5} u K, K in {4,6,7,8}",
        tuple(_unions((1, 2, 5), (4, 6, 7, 8))),
        "(0,1,2,3,1,4,3,6,4,5,6,7) (+8)",
    ),
    CatalogRow(
        "{1,2,7}",
        (RulesetSpec((1, 2, 7)),),
        "(0,1,2,3,1,4,3,2,4,5,6,7,8,9,7,6,9,8,11,10,12,13,10,11,13,12,15,14) (+16)",
    ),
    CatalogRow(
        "{1,4,9}",
        (RulesetSpec((1, 4, 9)),),
        "(0,1,0,1,2,3,2,3,1,4,5,4,3,6,7,6,4,5,8,9,6,7,10,11,9,"
        "8,9,12,11,10,11,14,12,13,12,13,14,15,14,15) (+16)",
    ),
)

SOLVED_ROWS = (
    CatalogRow(
        "{1, odd...}",
        (
            RulesetSpec((1,)),
            RulesetSpec((1, 3)),
            RulesetSpec((1, 5, 9)),
            RulesetSpec((1,), Tail(TailKind.ODD, 3)),
        ),
        "(0,1) (+0)",
    ),
) + tuple(
    CatalogRow(f"min C = {c1}", specs, f"(0)^{c1} (+1)")
    for c1, specs in (
        (2, (RulesetSpec((2,)), RulesetSpec((2, 7)), RulesetSpec((2,), Tail(TailKind.ALL, 5)))),
        (3, (RulesetSpec((3,)), RulesetSpec((3, 4, 10)))),
        (4, (RulesetSpec((), Tail(TailKind.ALL, 4)),)),
    )
) + (
    CatalogRow(
        "{1,2,3,...}",
        (RulesetSpec((1, 2, 3)), RulesetSpec((1, 2, 3, 6)), RulesetSpec((1, 2, 3), Tail(TailKind.ALL, 4))),
        "(0) (+1)",
    ),
) + tuple(
    CatalogRow(f"{{1,3,2k}}, k={k}", (RulesetSpec.of((1, 3, 2 * k)),), f"(0,1)^{k} (+2)")
    for k in range(1, 7)
)


@dataclass(frozen=True)
class RowResult:
    row: CatalogRow
    spec: RulesetSpec
    N: int
    p: Optional[int]
    s: Optional[int]
    prefix_ok: bool
    passed: bool
    note: str = ""


def run_ap_rows(rows=AP_ROWS, threads: int = 1) -> list[RowResult]:
    """Certify every ``AP_ROWS`` ruleset on a table of length ``8p``."""
    results = []
    for row in rows:
        expected = row.expected
        N = 8 * expected.p
        for spec in row.rulesets:
            table = compute_table(spec, N, threads=threads)
            prefix_ok = table.sequence()[: expected.p] == list(expected.period)
            cert = certify(spec, table)
            if cert is None:
                results.append(RowResult(row, spec, N, None, None, prefix_ok, False, "not certified"))
                continue
            hyp, _report = cert
            ok = prefix_ok and hyp.p == expected.p and hyp.s == expected.saltus
            results.append(RowResult(row, spec, N, hyp.p, hyp.s, prefix_ok, ok))
    return results


def run_solved_rows(rows=SOLVED_ROWS, N: int = 2000, threads: int = 1) -> list[RowResult]:
    """Detect the structure of every solved-family ruleset on a prefix of length ``N``.

    A row passes when ``detect`` finds a pure hypothesis and both the detected
    and the published notation generate the computed prefix.
    """
    results = []
    for row in rows:
        expected = row.expected
        for spec in row.rulesets:
            table = compute_table(spec, N, threads=threads)
            seq = table.sequence()
            prefix_ok = seq == expected.expand(N)
            hyp = detect(table)
            if hyp is None:
                results.append(RowResult(row, spec, N, None, None, prefix_ok, False, "nothing detected"))
                continue
            ok = prefix_ok and hyp.pure and hyp.holds_on(table.values)
            note = "" if (hyp.p, hyp.s) == (expected.p, expected.saltus) else (
                f"published form has p={expected.p}, s={expected.saltus}"
            )
            results.append(RowResult(row, spec, N, hyp.p, hyp.s, prefix_ok, ok, note))
    return results
