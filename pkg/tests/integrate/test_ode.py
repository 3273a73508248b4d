import math

import numpy as np
import pytest

from app.exceptions import JetOrderError, SingularLocusError
from app.integrate.ode import OdeSpec, derivative_labels, integrate_ode
from app.jets.jet import seed


def _third_order(name: str, rhs) -> OdeSpec:
    return OdeSpec(name=name, order=3, rhs=rhs, linear=True)


def test_free_third_order_equation():
    ode = _third_order("free", lambda y, d, p: 0.0)

    trajectory = integrate_ode(ode, [1.0, 2.0, 3.0], (0.0, 2.0), 1e-10)

    for y in np.linspace(0.0, 2.0, 9):
        assert trajectory.evaluate(y)[0] == pytest.approx(
            1.0 + 2.0 * y + 1.5 * y**2, abs=1e-9
        )


@pytest.mark.parametrize(
    ("frequency", "init"),
    [(1.0, [0.0, 1.0, 0.0]), (2.0, [0.0, 2.0, 0.0])],
)
def test_once_derived_harmonic_oscillator(frequency: float, init: list[float]):
    ode = _third_order("oscillator", lambda y, d, p: -p["omega"] ** 2 * d[1])
    ode = ode.with_params(omega=frequency)

    trajectory = integrate_ode(ode, init, (0.0, math.pi), 1e-10)

    for y in np.linspace(0.0, math.pi, 13):
        assert trajectory.evaluate(y)[0] == pytest.approx(
            math.sin(frequency * y), abs=1e-8
        )


def test_labels():
    ode = _third_order("free", lambda y, d, p: 0.0)

    assert ode.labels == ("u", "du_dy", "d2u_dy2")
    assert derivative_labels("w1", "y", 2) == ("w1", "dw1_dy")


@pytest.mark.parametrize("order", [0, 5])
def test_order_outside_of_range(order: int):
    with pytest.raises(JetOrderError):
        OdeSpec(name="bad", order=order, rhs=lambda y, d, p: 0.0)


def test_wrong_number_of_initial_values():
    ode = _third_order("free", lambda y, d, p: 0.0)

    with pytest.raises(JetOrderError):
        integrate_ode(ode, [1.0, 2.0], (0.0, 1.0))


def test_evaluation_on_singular_locus():
    ode = OdeSpec(
        name="inverse",
        order=1,
        rhs=lambda y, d, p: 1.0 / d[0],
        guard=lambda y, d, p: abs(d[0]),
    )

    with pytest.raises(SingularLocusError):
        ode.evaluate(0.0, [0.0])


def test_evaluation_through_jets():
    ode = OdeSpec(name="square", order=1, rhs=lambda y, d, p: d[0] ** 2)

    result = ode.evaluate(0.0, [seed("u", 3.0, 2)])

    assert result.value == 9.0
    assert result.partial("u") == 6.0
    assert result.partial("u", "u") == 2.0
