import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_criteria = pytest.StashKey[dict]()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion; printed in the terminal summary."""
    store = request.config.stash.setdefault(_criteria, {})

    def record(k: int, ok: bool, detail: str = "", variant: str = ""):
        name = f"{k:2d}{variant}"
        line = f"criterion {name}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        store[(k, variant)] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    store = config.stash.get(_criteria, {})
    if store:
        terminalreporter.section("acceptance criteria")
        for k in sorted(store):
            terminalreporter.write_line(store[k])
