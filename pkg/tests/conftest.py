import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=60
)
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="rewrite CLI golden files")
    parser.addoption("--run-slow", action="store_true", help="run the slow rational-field pipeline")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="slow; enable with --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running rational-field checks")


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")


DATA_DIR = Path(__file__).parent / "data"
_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def record(request):
    """Record one acceptance line: record(tag, title, ok, detail)."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def _record(tag, title, ok, detail=""):
        lines.append(f"{tag:<5} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else ""))

    return _record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
