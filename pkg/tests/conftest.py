import pytest

from moorehodgson import Instance, _backend

MOORE_P = [4, 1, 6, 3, 6, 8, 7, 10]
MOORE_D = [6, 8, 9, 11, 20, 25, 28, 35]
MOORE_W = [11 - p for p in MOORE_P]  # 7, 10, 5, 8, 5, 3, 4, 1
MOORE_CSV = "job,p,d\n" + "".join(f"{i},{p},{d}\n" for i, (p, d) in enumerate(zip(MOORE_P, MOORE_D), 1))


@pytest.fixture
def moore():
    return Instance.from_columns(MOORE_P, MOORE_D)


@pytest.fixture
def moore_weighted():
    return Instance.from_columns(MOORE_P, MOORE_D, MOORE_W)


@pytest.fixture(params=_backend.available())
def backend(request):
    return request.param


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
