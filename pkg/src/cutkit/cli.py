"""Command-line front end: ``cutkit <command> ...``."""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import catalog
from .closedform import closed_form
from .engine import compute_table
from .errors import CutkitError, NoCandidatePeriod
from .play import Outcome, Position, best_move, outcome
from .regularity import ap_test, detect
from .ruleset import classify, parse_ruleset, to_take_and_break


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("CUTKIT_THREADS")
    return int(env) if env else 1


def _write_csv(rows, header, out=None):
    writer = csv.writer(out or sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_seq(args) -> int:
    spec = parse_ruleset(args.cuts)
    table = compute_table(spec, args.max_heap, threads=_threads(args))
    values = table.sequence()
    if args.format == "csv":
        _write_csv(enumerate(values, start=1), ["n", "grundy"])
    elif args.format == "json":
        print(json.dumps({"ruleset": str(spec), "values": values}))
    else:
        print(" ".join(str(v) for v in values))
    return 0


def cmd_detect(args) -> int:
    spec = parse_ruleset(args.cuts)
    table = compute_table(spec, args.max_heap, threads=_threads(args))
    hyp = detect(table, args.max_p, args.max_n0)
    if args.format == "json":
        print(json.dumps({"ruleset": str(spec), "N": table.N, "hypothesis": hyp.to_dict() if hyp else None}))
    elif args.format == "csv":
        _write_csv([[hyp.n0, hyp.p, hyp.s, hyp.kind]] if hyp else [], ["n0", "p", "s", "kind"])
    elif hyp is None:
        print("no regularity found within bounds")
    else:
        print(hyp.describe())
    return 0


def cmd_aptest(args) -> int:
    spec = parse_ruleset(args.cuts)
    table = compute_table(spec, args.max_heap, threads=_threads(args))
    try:
        report = ap_test(spec, table)
    except NoCandidatePeriod as exc:
        data = {
            "ruleset": str(spec), "p": None, "t": None, "s": None,
            "ap1": False, "ap2": False, "ap3": False, "ap3_method": None,
            "thm_condition": False, "verdict": "Failed(NoCandidatePeriod)",
            "checked_N": table.N,
        }
        if args.format == "json":
            print(json.dumps(data))
        else:
            print(f"{spec}: Failed(NoCandidatePeriod) - {exc}")
        return 0
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        s = report.s
        extra = ", ".join(m.value for m in report.corroborating) or "none"
        print(
            f"{spec}: {report.verdict}, p={report.p}, t={report.t}, s={s}; "
            f"AP1={report.ap1} AP2={report.ap2} AP3={report.ap3} ({report.ap3_method.value}; "
            f"corroborated by {extra}); max C <= 4p: {report.thm_condition}; checked N={report.checked_N}"
        )
    return 0


def cmd_convert(args) -> int:
    code = to_take_and_break(parse_ruleset(args.cuts))
    hexa = code.hexadecimal()
    if args.format == "json":
        print(json.dumps({"code": str(code), "hexadecimal": hexa}))
    else:
        print(str(code))
        if hexa is not None:
            print(f"hexadecimal {hexa}")
    return 0


def cmd_solve(args) -> int:
    spec = parse_ruleset(args.cuts)
    pos = Position.parse(args.position)
    N = args.max_heap or max(pos.heaps, default=1)
    table = compute_table(spec, N, threads=_threads(args))
    if outcome(pos, table) is Outcome.PREVIOUS_PLAYER_WINS:
        print("previous player wins")
        return 0
    move = best_move(pos, table)
    print(f"first player wins: {move}")
    return 0


def cmd_table(args) -> int:
    threads = _threads(args)
    if args.which == "ap":
        results = catalog.run_ap_rows(threads=threads)
    else:
        results = catalog.run_solved_rows(threads=threads)
    records = [
        {
            "row": r.row.label,
            "ruleset": str(r.spec),
            "N": r.N,
            "expected_p": r.row.expected.p,
            "expected_s": r.row.expected.saltus,
            "p": r.p,
            "s": r.s,
            "sequence": r.row.notation,
            "prefix_ok": r.prefix_ok,
            "status": "PASS" if r.passed else "FAIL",
            "note": r.note,
        }
        for r in results
    ]
    if args.format == "json":
        print(json.dumps(records))
    elif args.format == "csv":
        keys = list(records[0])
        _write_csv([[rec[k] for k in keys] for rec in records], keys)
    else:
        for rec in records:
            note = f"  [{rec['note']}]" if rec["note"] else ""
            print(
                f"{rec['status']}  {rec['ruleset']:<18} p={rec['p']} s={rec['s']} "
                f"(expected p={rec['expected_p']} s={rec['expected_s']}) "
                f"{rec['sequence']}{note}"
            )
        failed = sum(rec["status"] == "FAIL" for rec in records)
        print(f"{len(records) - failed}/{len(records)} rows pass")
    return 0 if all(r.passed for r in results) else 1


def cmd_plot(args) -> int:
    spec = parse_ruleset(args.cuts)
    values = compute_table(spec, args.max_heap, threads=_threads(args)).sequence()
    if not args.dropouts:
        _write_csv(enumerate(values, start=1), ["n", "grundy"])
        return 0
    rows, running = [], -1
    for n, g in enumerate(values, start=1):
        running = max(running, g)
        rows.append([n, g, int(g < running - args.gap)])
    _write_csv(rows, ["n", "grundy", "dropout"])
    return 0


def cmd_classify(args) -> int:
    spec = parse_ruleset(args.cuts)
    family = classify(spec)
    print(family)
    if args.heap is not None:
        value = closed_form(family, args.heap)
        print("not covered" if value is None else value)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default=None, n_required=False, fmt=True):
        p.add_argument("-c", "--cuts", required=True, help="ruleset, e.g. 1,2 or 1,odd>=3")
        p.add_argument("-n", "--max-heap", type=int, default=n_default, required=n_required)
        p.add_argument("--threads", type=int, default=None)
        if fmt:
            p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    p = sub.add_parser("seq", help="Grundy values G(1..n)")
    common(p, n_required=True)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("detect", help="fit (n0, p, s) to a computed prefix")
    common(p, n_default=2000)
    p.add_argument("--max-p", type=int, default=None)
    p.add_argument("--max-n0", type=int, default=None)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("aptest", help="run the arithmetic-periodicity test")
    common(p, n_default=400)
    p.set_defaults(func=cmd_aptest)

    p = sub.add_parser("convert", help="equivalent take-and-break code")
    p.add_argument("-c", "--cuts", required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("solve", help="winner and a winning move for a sum of heaps")
    common(p, fmt=False)
    p.add_argument("-p", "--position", required=True, help="heap sizes, e.g. 4,7,7")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="recompute the reference tables")
    p.add_argument("which", choices=["solved", "ap"])
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.add_argument("--threads", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("plot", help="n,grundy scatter data as CSV")
    common(p, n_required=True, fmt=False)
    p.add_argument("--dropouts", action="store_true", help="flag values far below the running maximum")
    p.add_argument("--gap", type=int, default=8, help="drop-out threshold below the running maximum")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("classify", help="solved family and optional closed-form value")
    p.add_argument("-c", "--cuts", required=True)
    p.add_argument("--heap", type=int, default=None)
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CutkitError as exc:
        print(f"cutkit: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"cutkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
