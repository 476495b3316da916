import random
from pathlib import Path

import pytest

from symlie import IdealSpec, PolyRing, parse_polynomial
from symlie.fileio import parse_ideal_file

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def load_ideal(name: str) -> IdealSpec:
    return parse_ideal_file(fixture_text(name))


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(scope="session")
def quadric2():
    return load_ideal("ex_quadric2.ideal")


@pytest.fixture(scope="session")
def sphere3():
    return load_ideal("sum_squares3.ideal")


@pytest.fixture(scope="session")
def tree_ideal8():
    return load_ideal("staged_tree8.ideal")
