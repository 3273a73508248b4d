"""Superintegrable systems on the Darboux space of type IV. Cases A and D are
written in the squared-coordinate chart where the metric is rational, cases
B and C keep their trigonometric and hyperbolic form.
"""

import math

from app.jets import functions as fn
from app.jets.jet import Num, value_of

from .base import HamiltonianSystem
from .enums import SystemId
from .models import Params, StateLike


def _rational_metric(a: float, w1: Num, w2: Num) -> Num:
    return a * (w1**2 + w2**2) + 2.0 * (w1**2 - w2**2)


def _rational_guards(params: Params, state: StateLike) -> tuple[float, ...]:
    w1, w2 = value_of(state[0]), value_of(state[1])
    return (abs(w1), abs(w2), abs(_rational_metric(params["a"], w1, w2)))


class DarbouxIVA(HamiltonianSystem):
    system_id = SystemId.DIV_A
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"a": 3.0, "a1": 0.2, "a2": 0.1, "a3": 0.05}
    default_state = (1.0, 0.8, 0.3, 0.5)
    sample_box = ((0.5, 1.5), (0.5, 1.5), (-1.0, 1.0), (0.3, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        a, a1, a2, a3 = params["a"], params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        return (
            -4.0
            * w1**2
            * w2**2
            * (
                w3**2
                + w4**2
                + a1
                + a2 * (1.0 / w1**2 + 1.0 / w2**2)
                + a3 * (w1**2 + w2**2)
            )
            / ((a + 2.0) * w1**2 + (a - 2.0) * w2**2)
        )

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        a, a1, a2, a3 = params["a"], params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        metric = _rational_metric(a, w1, w2)
        kinetic = w3**2 + w4**2
        return (
            -8.0 * w1**2 * w2**2 * w3 / metric,
            -8.0 * w1**2 * w2**2 * w4 / metric,
            8.0
            * w1
            * w2**2
            / metric**2
            * (
                a * a3 * (w1**2 + w2**2) ** 2
                + a * w2**2 * kinetic
                + a1 * w2**2 * (a - 2.0)
                - 4.0 * a2
                + 2.0 * a3 * (w1**4 - w2**4 - 2.0 * w1**2 * w2**2)
                - 2.0 * w2**2 * kinetic
            ),
            8.0
            * w1**2
            * w2
            / metric**2
            * (
                a * a3 * (w1**2 + w2**2) ** 2
                + a * w1**2 * kinetic
                + a1 * w1**2 * (a + 2.0)
                + 4.0 * a2
                + 2.0 * a3 * (w1**4 - w2**4 + 2.0 * w1**2 * w2**2)
                + 2.0 * w1**2 * kinetic
            ),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return _rational_guards(params, state)


class DarbouxIVB(HamiltonianSystem):
    system_id = SystemId.DIV_B
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"a": 3.0, "b1": 0.2, "b2": 0.1, "b3": 0.3}
    default_state = (0.6, 0.8, 0.3, 0.5)
    sample_box = ((0.2, 0.7), (0.3, 1.5), (-1.0, 1.0), (0.3, 1.0))

    @staticmethod
    def separated_potential(params: Params, w2: Num) -> Num:
        """b2/sinh²(w2) + b3/cosh²(w2), the part of the Hamiltonian in w2 only"""
        return params["b2"] / fn.sinh(w2) ** 2 + params["b3"] / fn.cosh(w2) ** 2

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        w1, w2, w3, w4 = state
        angle = fn.sin(2.0 * w1) ** 2
        return -(
            angle * (w3**2 + w4**2 + self.separated_potential(params, w2))
            + params["b1"]
        ) / (2.0 * fn.cos(2.0 * w1) + params["a"])

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        w1, w2 = value_of(state[0]), value_of(state[1])
        return (
            abs(math.sin(2.0 * w1)),
            abs(math.sinh(w2)),
            abs(2.0 * math.cos(2.0 * w1) + params["a"]),
        )


class DarbouxIVC(HamiltonianSystem):
    system_id = SystemId.DIV_C
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"a": 3.0, "c1": 0.2, "c2": 0.1, "c3": 0.3}
    default_state = (0.7, 0.5, 0.3, 0.4)
    sample_box = ((0.2, 1.3), (0.3, 1.5), (-1.0, 1.0), (0.3, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        a, c1, c2, c3 = params["a"], params["c1"], params["c2"], params["c3"]
        w1, w2, w3, w4 = state
        numerator = (
            w3**2
            + w4**2
            + c1 / fn.cos(w1) ** 2
            + c2 / fn.cosh(w2) ** 2
            + c3 * (1.0 / fn.sin(w1) ** 2 - 1.0 / fn.sinh(w2) ** 2)
        )
        return -numerator / (
            (a + 2.0) / fn.sinh(2.0 * w2) ** 2 + (a - 2.0) / fn.sin(2.0 * w1) ** 2
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        a = params["a"]
        w1, w2 = value_of(state[0]), value_of(state[1])
        metric = (a + 2.0) / math.sinh(2.0 * w2) ** 2 + (a - 2.0) / math.sin(
            2.0 * w1
        ) ** 2
        return (abs(math.sin(2.0 * w1)), abs(math.sinh(2.0 * w2)), abs(metric))


class DarbouxIVD(HamiltonianSystem):
    system_id = SystemId.DIV_D
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"a": 3.0, "d": 0.1}
    default_state = (1.0, 0.8, 0.3, 0.5)
    sample_box = ((0.5, 1.5), (0.5, 1.5), (-1.0, 1.0), (0.3, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        a, d = params["a"], params["d"]
        w1, w2, w3, w4 = state
        return (
            -4.0
            * w1**2
            * w2**2
            * (w3**2 + w4**2 + d * (1.0 / w1**2 + 1.0 / w2**2))
            / ((a + 2.0) * w1**2 + (a - 2.0) * w2**2)
        )

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        a, d = params["a"], params["d"]
        w1, w2, w3, w4 = state
        metric = _rational_metric(a, w1, w2)
        kinetic = w3**2 + w4**2
        return (
            -8.0 * w1**2 * w2**2 * w3 / metric,
            -8.0 * w1**2 * w2**2 * w4 / metric,
            8.0
            * w1
            * w2**2
            / metric**2
            * (a * w2**2 * kinetic - 4.0 * d - 2.0 * w2**2 * kinetic),
            8.0
            * w1**2
            * w2
            / metric**2
            * (a * w1**2 * kinetic + 4.0 * d + 2.0 * w1**2 * kinetic),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return _rational_guards(params, state)
