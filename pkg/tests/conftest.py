import sys
from pathlib import Path

import pytest

from leibniz import GF, QQ, catalog_make

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def a1():
    """[e1, e1] = e2."""
    return catalog_make("cyclic_leibniz", 2, QQ)


@pytest.fixture
def a2():
    """Heisenberg: [e1, e2] = e3 = -[e2, e1]."""
    return catalog_make("heisenberg", 3, QQ)


@pytest.fixture
def n2():
    """[e1, e2] = e2 = -[e2, e1]."""
    return catalog_make("nonabelian2", 2, QQ)


@pytest.fixture(params=[QQ, GF(2), GF(3), GF(5)], ids=str)
def field(request):
    return request.param


#: (criterion number, title, passed, detail) rows filled in by test_acceptance.
ACCEPTANCE: list = []


@pytest.fixture
def acceptance():
    def record(number, title, passed, detail=""):
        ACCEPTANCE.append((number, title, passed, detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}" + (f": {detail}" if detail else ""))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE):
        line = f"{'PASS' if passed else 'FAIL'}  {number}. {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
