def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for index in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[index])
