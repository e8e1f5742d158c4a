import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(test_acceptance.RESULTS, key=int):
        terminalreporter.write_line(test_acceptance.RESULTS[key])
