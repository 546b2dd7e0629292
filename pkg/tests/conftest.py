def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k, (ok, detail) in sorted(test_acceptance.RESULTS.items()):
        terminalreporter.write_line(test_acceptance.line(k, ok, detail))
