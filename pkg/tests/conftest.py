import pytest
from hypothesis import HealthCheck, settings

from segalkit.waldhausen import FqVect, build_S, build_S_rel

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# criterion number -> (passed, description); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {desc}")


@pytest.fixture(scope="session")
def F2():
    return FqVect(2, 2)


@pytest.fixture(scope="session")
def S_F2(F2):
    """S of F_2 vector spaces of dimension <= 2, to level 7."""
    return build_S(F2, 7)


@pytest.fixture(scope="session")
def S_F2_small(F2):
    return build_S(F2.sub({0, 1}), 5)


@pytest.fixture(scope="session")
def rel_F2(S_F2_small, S_F2):
    """``(S^rel, iota, pi)`` for the inclusion of dimensions ``<= 1`` into ``<= 2``."""
    return build_S_rel(S_F2_small, S_F2, 3)
