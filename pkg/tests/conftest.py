from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_RESULTS = pytest.StashKey[dict]()


class Criterion:
    def __init__(self, store: dict, number: int, title: str):
        self.store, self.number, self.title = store, number, title

    def __enter__(self):
        self.store[self.number] = (self.title, "FAIL", "")
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc_type is None:
            self.store[self.number] = (self.title, "PASS", "")
        else:
            detail = str(exc).splitlines()[0] if str(exc) else exc_type.__name__
            self.store[self.number] = (self.title, "FAIL", detail)
        line = f"[{self.store[self.number][1]}] criterion {self.number}: {self.title}"
        print(line)
        return False


@pytest.fixture
def criterion(request):
    store = request.config.stash.setdefault(_RESULTS, {})

    def make(number: int, title: str) -> Criterion:
        return Criterion(store, number, title)

    return make


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(_RESULTS, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(store):
        title, status, detail = store[n]
        terminalreporter.write_line(f"[{status}] criterion {n}: {title}" + (f" ({detail})" if detail else ""))
