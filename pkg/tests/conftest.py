from __future__ import annotations

import random
from fractions import Fraction

import pytest


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


@pytest.fixture
def rng():
    return random.Random(20240917)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
