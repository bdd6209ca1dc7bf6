"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

import re

_CRITERION = re.compile(r"test_ac(\d+)_")
_outcomes: dict[int, tuple[str, list[str]]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or (report.when != "call" and report.passed):
        return
    num = int(m.group(1))
    doc = _outcomes.get(num, ("PASS", []))
    status = doc[0]
    if report.failed:
        status = "FAIL"
    elif report.skipped and status == "PASS":
        status = "SKIP"
    _outcomes[num] = (status, doc[1] + [report.nodeid.split("::")[-1]])


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        status, tests = _outcomes[num]
        names = ", ".join(sorted(set(tests)))
        terminalreporter.write_line(f"AC{num:<3} {status}  ({names})")
