def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria at their stated tolerances")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for text in mod.report_lines():
        terminalreporter.write_line(text)
