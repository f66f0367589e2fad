def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(report, "user_properties", ()))
            if report.when == "call" and "criterion" in props:
                lines.append((props["criterion"], outcome))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(lines):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  criterion {number:>2}: {title}")
