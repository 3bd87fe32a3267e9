import re
import sys


def pytest_runtest_logreport(report):
    """One PASS/FAIL line per acceptance criterion, bypassing capture."""
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    match = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not match:
        return
    outcome = "PASS" if report.passed else "FAIL"
    print(
        f"acceptance criterion {int(match.group(1))}: {outcome}",
        file=sys.__stdout__,
    )
