from pathlib import Path

import pytest

from bfpower.power_model import ComponentPowerTable

GOLDEN_DIR = Path(__file__).parent / "golden"
REPO_ROOT = Path(__file__).parent.parent


@pytest.fixture
def table():
    return ComponentPowerTable.paper_defaults()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.format_results(mod.RESULTS):
        terminalreporter.write_line(line)
