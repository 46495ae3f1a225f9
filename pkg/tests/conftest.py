import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

unit = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def sphere_points(draw, radius=0.5, min_up=0.0):
    """Points on the sphere of given radius with radius + z >= min_up."""
    v = np.array([draw(unit), draw(unit), draw(unit)])
    n = np.linalg.norm(v)
    if n < 1e-3:
        v, n = np.array([0.0, 0.0, 1.0]), 1.0
    v = radius * v / n
    if radius + v[2] < min_up:
        v[2] = -v[2]
    return tuple(float(x) for x in v)


@st.composite
def ball_points(draw):
    x, y, z = draw(sphere_points())
    k = draw(st.floats(0.0, 1.0))
    return (k * x, k * y, k * z)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
