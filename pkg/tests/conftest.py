from pathlib import Path

import pytest
from hypothesis import settings

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

settings.register_profile("default", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fixtures() -> Path:
    return FIXTURES


_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::", 1)[1]
    if report.when == "call" or report.failed:
        outcome = "PASS" if report.passed else "FAIL"
        detail = dict(report.user_properties).get("measured", "")
        if name not in _acceptance or outcome == "FAIL":
            _acceptance[name] = (outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, (outcome, detail) in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{outcome}  {name}  {detail}")
