"""Superintegrable systems on the Darboux space of type II, coordinates
(w1, w2) and momenta (w3, w4).
"""

from app.jets.jet import Num, value_of

from .base import HamiltonianSystem
from .enums import SystemId
from .models import Params, StateLike


def _conformal(w1: Num) -> Num:
    return w1**2 / (w1**2 + 1.0)


class DarbouxIIA(HamiltonianSystem):
    system_id = SystemId.DII_A
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"a1": 0.5, "a2": 0.2, "a3": 0.3}
    default_state = (1.0, 0.5, 0.8, 0.3)
    sample_box = ((0.5, 2.0), (-1.0, 1.0), (0.3, 1.0), (-1.0, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        return _conformal(w1) * (
            w3**2
            + w4**2
            + a1 * (w1**2 / 4.0 + w2**2)
            + a2 * w2
            + a3 / w1**2
        )

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        return (
            2.0 * w1**2 * w3 / (w1**2 + 1.0),
            2.0 * w1**2 * w4 / (w1**2 + 1.0),
            -w1
            * (
                4.0 * w3**2
                + 4.0 * w4**2
                + a1 * w1**4
                + 2.0 * a1 * w1**2
                + 4.0 * a1 * w2**2
                + 4.0 * a2 * w2
                - 4.0 * a3
            )
            / (2.0 * (w1**2 + 1.0) ** 2),
            -(w1**2) * (2.0 * a1 * w2 + a2) / (w1**2 + 1.0),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (abs(value_of(state[0])),)


class DarbouxIIB(HamiltonianSystem):
    system_id = SystemId.DII_B
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"b1": 0.2, "b2": 0.2, "b3": 0.1}
    default_state = (1.0, 1.0, 0.8, 0.6)
    sample_box = ((0.5, 2.0), (0.5, 2.0), (0.3, 1.0), (0.3, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        w1, w2, w3, w4 = state
        return _conformal(w1) * (
            w3**2
            + w4**2
            + b1 * (w1**2 + w2**2)
            + b2 / w1**2
            + b3 / w2**2
        )

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        w1, w2, w3, w4 = state
        return (
            2.0 * w1**2 * w3 / (w1**2 + 1.0),
            2.0 * w1**2 * w4 / (w1**2 + 1.0),
            -2.0
            * w1
            * (
                w2**2 * w3**2
                + w2**2 * w4**2
                + b1 * w1**4 * w2**2
                + 2.0 * b1 * w1**2 * w2**2
                + b1 * w2**4
                - b2 * w2**2
                + b3
            )
            / (w2**2 * (w1**2 + 1.0) ** 2),
            -2.0 * w1**2 * (b1 * w2**4 - b3) / (w2**3 * (w1**2 + 1.0)),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (abs(value_of(state[0])), abs(value_of(state[1])))


class DarbouxIIC(HamiltonianSystem):
    system_id = SystemId.DII_C
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"a1": 0.3, "a2": 0.2, "a3": 0.1}
    default_state = (1.0, 1.2, 0.4, 0.6)
    sample_box = ((0.5, 2.0), (0.5, 2.0), (0.2, 1.0), (0.2, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        return (w3**2 + w4**2 + a1 + a2 / w1**2 + a3 / w2**2) / (
            w1**2 + w2**2 + 1.0 / w1**2 + 1.0 / w2**2
        )

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        first = w1**2 * w2**2 + 1.0
        second = w1**2 + w2**2
        kinetic = w3**2 + w4**2
        return (
            2.0 * w1**2 * w2**2 * w3 / (first * second),
            2.0 * w1**2 * w2**2 * w4 / (first * second),
            2.0
            * w1
            * w2**2
            * (
                (a1 * w2**2 + a3 + kinetic * w2**2) * (w1**4 - 1.0)
                + (w2**4 + 1.0 + 2.0 * w1**2 * w2**2) * a2
            )
            / (first**2 * second**2),
            2.0
            * w1**2
            * w2
            * (
                (a1 * w1**2 + a2 + kinetic * w1**2) * (w2**4 - 1.0)
                + (w1**4 + 2.0 * w1**2 * w2**2 + 1.0) * a3
            )
            / (first**2 * second**2),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (abs(value_of(state[0])), abs(value_of(state[1])))


class DarbouxIID(HamiltonianSystem):
    system_id = SystemId.DII_D
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    cyclic_index = 1
    default_params = {"d": 0.3}
    default_state = (1.0, 0.0, 0.2, 1.0)
    sample_box = ((0.5, 2.0), (-2.0, 2.0), (-1.0, 1.0), (0.5, 1.5))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        w1, _, w3, w4 = state
        return _conformal(w1) * (w3**2 + w4**2 + params["d"])

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        w1, _, w3, w4 = state
        return (
            2.0 * w1**2 * w3 / (w1**2 + 1.0),
            2.0 * w1**2 * w4 / (w1**2 + 1.0),
            -2.0 * w1 * (w3**2 + w4**2 + params["d"]) / (w1**2 + 1.0) ** 2,
            0.0,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (abs(value_of(state[0])),)
