ACCEPTANCE_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        ACCEPTANCE_RESULTS[report.nodeid] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid in sorted(ACCEPTANCE_RESULTS):
        name = nodeid.split("::")[-1]
        status = "PASS" if ACCEPTANCE_RESULTS[nodeid] else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
