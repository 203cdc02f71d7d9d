import sys

import hypothesis
import numpy as np
import pytest

from diraccat.hamiltonian import DiracState, ModelParams

hypothesis.settings.register_profile("default", max_examples=40, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def params():
    return ModelParams(xi=0.25, cutoff=16)


def random_state(rng, cutoff, sector=None):
    """Normalized random DiracState; ``sector`` restricts to listed components (1-based)."""
    amps = rng.normal(size=(4, cutoff + 1)) + 1j * rng.normal(size=(4, cutoff + 1))
    if sector is not None:
        mask = np.zeros(4, dtype=bool)
        mask[[j - 1 for j in sector]] = True
        amps[~mask] = 0.0
    return DiracState(amps / np.linalg.norm(amps))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
