import sys
from pathlib import Path

import pytest

# make the fixture/oracle helpers importable from any rootdir
sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(n, label): acceptance criterion covered by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, label = mark.args
    passed_so_far, _ = _CRITERIA.get(number, (True, label))
    _CRITERIA[number] = (passed_so_far and report.passed, label)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        passed, label = _CRITERIA[number]
        terminalreporter.write_line(
            "criterion %2d %s  %s" % (number,
                                      "PASS" if passed else "FAIL", label))
