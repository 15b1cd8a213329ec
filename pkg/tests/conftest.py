"""Echo the acceptance criterion lines after the run.

pytest captures file descriptors while tests execute, so the acceptance
tests record their PASS/FAIL lines in test_acceptance.RESULTS and this
hook replays them in the terminal summary, where nothing is captured.
"""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria", sep="-")
    for line in lines:
        terminalreporter.write_line(line)
