ACCEPTANCE_MODULE = "test_acceptance"


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    reports = []
    for outcome in ("passed", "failed", "error"):
        reports.extend(
            r
            for r in terminalreporter.stats.get(outcome, [])
            if getattr(r, "when", None) == "call" and ACCEPTANCE_MODULE in r.nodeid
        )
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for report in sorted(reports, key=lambda r: r.nodeid):
        status = "PASS" if report.passed else "FAIL"
        name = report.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{status}  {name}")
