import os
import re
import sys

sys.path.insert(0, os.path.dirname(__file__))

_CRITERION = re.compile(r"test_criterion_0*(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    verdicts = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            match = _CRITERION.search(getattr(report, "nodeid", ""))
            if match:
                number = int(match.group(1))
                ok = outcome == "passed"
                verdicts[number] = verdicts.get(number, True) and ok
    if verdicts:
        terminalreporter.write_line("")
        for number in sorted(verdicts):
            verdict = "PASS" if verdicts[number] else "FAIL"
            terminalreporter.write_line(f"CRITERION {number}: {verdict}")
