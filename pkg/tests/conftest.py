import os

import pytest
from hypothesis import HealthCheck, settings

os.environ.pop("HECKE_CACHE", None)

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def words():
    """Parse a word string into a group element."""
    from heckecells.weylgroup import parse_word

    return parse_word


def pytest_terminal_summary(terminalreporter):
    from _criteria import ACCEPTANCE

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} {title} {detail}".rstrip())
