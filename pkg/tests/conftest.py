import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.failed:
        _outcomes[name] = "FAIL"
    elif report.when == "call" and name not in _outcomes:
        _outcomes[name] = "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    import test_acceptance as acc

    terminalreporter.section("acceptance criteria")
    for name, label in acc.CRITERIA.items():
        terminalreporter.write_line(f"{_outcomes.get(name, 'NOT RUN'):7} {label}")
    for line in acc.INFO:
        terminalreporter.write_line(line)
