import pytest

from corpus import corpus
from equirank.group_core import cyclic_group
from equirank.gset import classify, shift_action

# acceptance criterion number -> (description, passed)
CRITERIA: dict[int, tuple[str, bool]] = {}


@pytest.fixture(scope="session")
def criteria():
    return CRITERIA


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        desc, ok = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {desc}")


@pytest.fixture(scope="session")
def z2_shift():
    return shift_action(cyclic_group(2), 2)


@pytest.fixture(scope="session")
def z4_shift():
    return shift_action(cyclic_group(4), 2)


@pytest.fixture(scope="session")
def z4_class(z4_shift):
    return classify(z4_shift)


@pytest.fixture(scope="session")
def z2_class(z2_shift):
    return classify(z2_shift)


@pytest.fixture(scope="session")
def instances():
    return corpus()
