import os
import sys

from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("MLV_HYPOTHESIS_PROFILE", "repo"))


def pytest_terminal_summary(terminalreporter):
    if os.environ.get("MLV_ACCEPTANCE_CHILD"):
        return
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[n])
