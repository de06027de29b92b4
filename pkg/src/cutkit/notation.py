"""Arithmetic-periodic sequence notation, e.g. ``((0,1)^2(2,3)^2,1,4) (+8)``.

A group in parentheses may carry a repeat count ``^k``; adjacent groups need
no comma between them.  The trailing ``(+s)`` gives the saltus.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MalformedText

_SALTUS_RE = re.compile(r"\(\+(\d+)\)$")
_TOKEN_RE = re.compile(r"\d+|[(),^]")


@dataclass(frozen=True)
class PeriodicNotation:
    period: tuple[int, ...]
    saltus: int

    @property
    def p(self) -> int:
        return len(self.period)

    def value(self, n: int) -> int:
        q, r = divmod(n - 1, self.p)
        return self.saltus * q + self.period[r]

    def expand(self, count: int) -> list[int]:
        return [self.value(n) for n in range(1, count + 1)]

    def __str__(self) -> str:
        return format_notation(self.period, self.saltus)


def format_notation(period, saltus: int) -> str:
    return "(" + ",".join(str(int(v)) for v in period) + f") (+{saltus})"


def parse_notation(text: str) -> PeriodicNotation:
    compact = text.replace("~", "").replace(" ", "")
    m = _SALTUS_RE.search(compact)
    if m is None:
        raise MalformedText(f"missing saltus '(+s)' in {text!r}")
    body = compact[: m.start()]
    tokens = _TOKEN_RE.findall(body)
    if "".join(tokens) != body:
        raise MalformedText(f"unexpected characters in {text!r}")
    values, pos = _parse_seq(tokens, 0)
    if pos != len(tokens) or not values:
        raise MalformedText(f"cannot parse sequence {text!r}")
    return PeriodicNotation(tuple(values), int(m.group(1)))


def _parse_seq(tokens: list[str], pos: int) -> tuple[list[int], int]:
    out: list[int] = []
    while pos < len(tokens) and tokens[pos] != ")":
        tok = tokens[pos]
        if tok == ",":
            pos += 1
            continue
        if tok == "(":
            inner, pos = _parse_seq(tokens, pos + 1)
            if pos >= len(tokens) or tokens[pos] != ")":
                raise MalformedText("unbalanced parentheses")
            pos += 1
            reps = 1
            if pos < len(tokens) and tokens[pos] == "^":
                if pos + 1 >= len(tokens) or not tokens[pos + 1].isdigit():
                    raise MalformedText("'^' must be followed by a count")
                reps = int(tokens[pos + 1])
                pos += 2
            out.extend(inner * reps)
        elif tok.isdigit():
            out.append(int(tok))
            pos += 1
        else:
            raise MalformedText(f"unexpected token {tok!r}")
    return out, pos
