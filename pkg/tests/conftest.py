import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

_acceptance = {}


@pytest.fixture(scope="session")
def reference():
    return json.loads((FIXTURES / "reference.json").read_text())


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("acceptance")
    if marker:
        _acceptance[marker[0]] = (marker[1], report.outcome, report.duration)


def pytest_runtest_setup(item):
    m = item.get_closest_marker("acceptance")
    if m is not None:
        item.user_properties.append(("acceptance", m.args))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcome, seconds = _acceptance[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        tr.write_line(f"criterion {number}: {verdict}  {title}  ({seconds:.1f}s)")
