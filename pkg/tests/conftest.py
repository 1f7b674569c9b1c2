"""Shared pytest configuration.

Collects the acceptance-gate outcomes and prints one PASS/FAIL line per
criterion in the terminal summary, so the gate's verdict is readable at a
glance regardless of how verbose the run is.
"""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _CRITERION.search(report.nodeid)
    if match:
        _outcomes[int(match.group(1))] = (report.outcome, match.group(2))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.write_sep("=", "acceptance gate")
    for num in sorted(_outcomes):
        outcome, label = _outcomes[num]
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(outcome,
                                                           outcome.upper())
        terminalreporter.write_line(
            f"CRITERION {num:2d}: {verdict} — {label.replace('_', ' ')}")
