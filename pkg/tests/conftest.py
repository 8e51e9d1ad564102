from pathlib import Path

import pytest

from argex import Framework
from argex.oracle import corpus

DATA = Path(__file__).parent / "data"

AF1_ATTACKS = {("B", "A"), ("C", "B"), ("C", "D"), ("D", "C"), ("E", "B"),
               ("F", "E"), ("F", "G"), ("G", "F")}
AF2_ATTACKS = {("A", "C"), ("C", "A"), ("A", "D"), ("C", "B"), ("D", "B"), ("B", "D")}


def fs(text=""):
    """Shorthand: fs("CEG") -> frozenset({"C", "E", "G"})."""
    return frozenset(text)


def fam(*texts):
    return {fs(t) for t in texts}


@pytest.fixture(scope="session")
def af1():
    return Framework("ABCDEFG", AF1_ATTACKS)


@pytest.fixture(scope="session")
def af2():
    return Framework("ABCD", AF2_ATTACKS)


@pytest.fixture(scope="session")
def cycle3():
    return Framework("ABC", {("A", "B"), ("B", "C"), ("C", "A")})


@pytest.fixture
def single():
    return Framework(["X"], set())


@pytest.fixture(scope="session")
def random_corpus():
    return [fw for _, fw in corpus(500)]


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
