from collections import defaultdict

import pytest

_criteria: dict = defaultdict(list)
_titles: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    _titles[n] = title
    if report.when == "call" or report.failed:
        _criteria[n].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        verdict = "PASS" if results and all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} {verdict}  {_titles[n]} ({len(results)} test(s))")
