import pytest
from hypothesis import settings

from qplane.cyclotomic import make_root

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def f3():
    return make_root(3)


@pytest.fixture(scope="session")
def f5():
    return make_root(5)


@pytest.fixture(scope="session")
def f7():
    return make_root(7)


@pytest.fixture(params=[3, 5, 7], ids=lambda n: f"N={n}")
def field(request):
    return make_root(request.param)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
