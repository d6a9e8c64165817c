import pytest

_ACCEPTANCE_LINES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(label): end-to-end acceptance check; the label is echoed "
        "with a PASS/FAIL verdict in the terminal summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and report.when == "call":
        label = marker.kwargs.get("label") or marker.args[0]
        verdict = "PASS" if report.passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"{label}: {verdict}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
