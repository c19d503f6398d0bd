import math

import numpy as np
import pytest
from hypothesis import strategies as st

from phaselimits.fock import PureState, enumerate_manifold
from phaselimits.phase import PhaseProfile

ACCEPTANCE_LINES: list[str] = []


@st.composite
def pure_states(draw, max_modes=3, max_photons=4, min_modes=1):
    """Normalized random states over manifolds 0..max_photons."""
    M = draw(st.integers(min_modes, max_modes))
    kets = [k for n in range(max_photons + 1) for k in enumerate_manifold(M, n)]
    chosen = draw(st.lists(st.sampled_from(kets), min_size=1, max_size=min(8, len(kets)), unique=True))
    mags = draw(st.lists(st.floats(0.05, 1.0), min_size=len(chosen), max_size=len(chosen)))
    phases = draw(st.lists(st.floats(0.0, 2 * math.pi), min_size=len(chosen), max_size=len(chosen)))
    amps = {k: m * complex(math.cos(p), math.sin(p)) for k, m, p in zip(chosen, mags, phases)}
    return PureState(M, amps).normalize()


@st.composite
def profiles(draw, mode_count):
    lam = draw(st.lists(st.floats(-1.0, 1.0), min_size=mode_count, max_size=mode_count))
    phi = draw(st.floats(0.0, 2 * math.pi))
    return PhaseProfile(lam, phi)


@st.composite
def states_and_profiles(draw, **kwargs):
    state = draw(pure_states(**kwargs))
    return state, draw(profiles(state.mode_count))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
