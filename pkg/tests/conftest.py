"""Shared fixtures and the per-criterion acceptance summary.

Tests tagged ``@pytest.mark.acceptance(n, "title")`` are grouped by ``n``;
after the run one ``PASS`` or ``FAIL`` line is printed for every criterion.
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from cutkit import compute_table, parse_ruleset  # noqa: E402

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    entry = _results.setdefault(number, {"title": title, "ok": True, "ran": False})
    if report.when == "call":
        entry["ran"] = True
    if report.failed or (report.when == "call" and report.skipped):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        status = "PASS" if entry["ok"] and entry["ran"] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {entry['title']}")


_tables = {}


@pytest.fixture(scope="session")
def table_of():
    """Memoised ``compute_table(parse_ruleset(text), N)``."""

    def get(text, N):
        key = (text, N)
        if key not in _tables:
            _tables[key] = compute_table(parse_ruleset(text), N)
        return _tables[key]

    return get
