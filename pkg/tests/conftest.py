import pytest

from smallwitt.automorphisms import aut_group_summary
from smallwitt.plane import build_plane
from smallwitt.witt import build_witt

_criteria: list[tuple[int, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria.append((marker.args[0], marker.args[1], "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_criteria):
        terminalreporter.write_line(f"AC{number:<3} {status}  {title}")


@pytest.fixture(scope="session")
def plane():
    return build_plane(3)


@pytest.fixture(scope="session")
def fano():
    return build_plane(2)


@pytest.fixture(scope="session")
def witt(plane):
    return build_witt(plane, 0)


@pytest.fixture(scope="session")
def w12(witt):
    return witt.to_design()


@pytest.fixture(scope="session")
def summary(w12):
    return aut_group_summary(w12)
