"""Print one PASS/FAIL line per acceptance criterion at the end of the run."""

_CRITERION: dict[str, int] = {}
_RESULTS: dict[int, list[str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERION[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    number = _CRITERION.get(report.nodeid)
    if number is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _RESULTS.setdefault(number, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok = all(outcome == "passed" for outcome in _RESULTS[number])
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}")
