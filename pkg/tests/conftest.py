import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polyode.ode import EquationParams  # noqa: E402

HERMITE = EquationParams.of(0, 0, 1, -2, 0)
LAGUERRE0 = EquationParams.of(0, 1, 0, -1, 1)
LEGENDRE = EquationParams.of(-1, 0, 1, -2, 0)


@pytest.fixture
def rng():
    return random.Random(20240611)


def frac(text) -> Fraction:
    return Fraction(text)


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import LINES

    if not LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(LINES):
        terminalreporter.write_line(LINES[key])
