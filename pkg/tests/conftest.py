import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from curvevals import catalog  # noqa: E402


@pytest.fixture(scope="session")
def curves():
    return {name: catalog.get(name) for name in catalog.CATALOG}


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for tag in sorted(results):
            terminalreporter.write_line(results[tag])
