import numpy as np
import pytest

from app.integrate.solver import integrate
from app.integrate.trajectory import Trajectory


def harmonic(t: float, y: np.ndarray) -> np.ndarray:
    return np.array([y[1], -y[0]])


@pytest.fixture(scope="module")
def harmonic_trajectory() -> Trajectory:
    return integrate(harmonic, [1.0, 0.0], (0.0, 2.0 * np.pi), 1e-10)
