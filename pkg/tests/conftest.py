import pytest
from hypothesis import HealthCheck, settings

from spiralchain import corpus

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def load():
    cache = {}

    def _load(name):
        if name not in cache:
            cache[name] = corpus.load_graph(name)
        return cache[name]

    return _load


@pytest.fixture(scope="session")
def k4(load):
    return load("k4")


@pytest.fixture(scope="session")
def prism(load):
    return load("prism")


@pytest.fixture(scope="session")
def twin_pair(load):
    return load("twin_pair")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
