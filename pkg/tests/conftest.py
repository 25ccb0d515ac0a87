import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@pytest.fixture(scope="session")
def mj2():
    from oretower.zoo import makeMJ2

    return makeMJ2()


@pytest.fixture(scope="session")
def gf2():
    from oretower.zoo import makeGf

    return makeGf("c^2")


@pytest.fixture(scope="session")
def p_c2_c():
    from oretower.zoo import makeP

    return makeP("c^2", "c")


CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome is printed at the end."""

    class Rec:
        def __call__(self, number, text):
            self.key = (number, text)
            CRITERIA[self.key] = "FAIL"
            return self

        def passed(self):
            CRITERIA[self.key] = "PASS"

    return Rec()


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (n, text), status in sorted(CRITERIA.items()):
        terminalreporter.write_line(f"criterion {n:>2}: {status} - {text}")
