import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m and (rep.when == "call" or outcome == "error"):
                rows.append((int(m.group(1)), m.group(2), "PASS" if outcome == "passed" else "FAIL",
                             rep.duration))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for k, name, verdict, dur in sorted(rows):
        terminalreporter.write_line(f"criterion {k} [{verdict}] {name.replace('_', ' ')} ({dur:.2f}s)")
