from collections import defaultdict

import pytest

_results = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        _results[marker].append((report.nodeid.split("::")[-1], report.passed))


@pytest.fixture(autouse=True)
def _record_criterion(request):
    m = request.node.get_closest_marker("acceptance")
    if m is not None:
        request.node.user_properties.append(("criterion", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_results):
        cases = _results[crit]
        ok = all(passed for _, passed in cases)
        failed = [name for name, passed in cases if not passed]
        line = f"criterion {crit}: {'PASS' if ok else 'FAIL'} ({len(cases) - len(failed)}/{len(cases)} cases)"
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
