import helpers


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criterion PASS/FAIL lines outside capture."""
    if helpers.ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in helpers.ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)
