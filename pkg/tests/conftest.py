"""Collects acceptance outcomes and prints a one-line verdict per criterion."""

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_ac(\d+)_")
_titles: dict[str, tuple[int, str]] = {}
_outcomes: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.search(item.nodeid)
        if m:
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _titles[item.nodeid] = (int(m.group(1)), doc)


def pytest_runtest_logreport(report):
    if report.nodeid not in _titles:
        return
    if report.when == "call" or report.failed:
        if _outcomes.get(report.nodeid) != "FAIL":
            _outcomes[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (num, title) in sorted(_titles.items(), key=lambda kv: kv[1][0]):
        verdict = _outcomes.get(nodeid, "NOT RUN")
        terminalreporter.write_line(f"AC{num} {verdict}: {title}")
