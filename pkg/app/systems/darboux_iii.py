"""Superintegrable systems on the Darboux space of type III"""

from app.jets.jet import Num, value_of

from .base import HamiltonianSystem
from .enums import SystemId
from .models import Params, StateLike


def _metric(w1: Num, w2: Num) -> Num:
    return 4.0 + w1**2 + w2**2


def _light_cone(state: StateLike) -> tuple[float, ...]:
    """Guards of the (w1 + w2)(2 + w1 - w2) metric of cases C and D"""
    w1, w2 = value_of(state[0]), value_of(state[1])
    return (abs(w1), abs(w2), abs(w1 + w2), abs(2.0 + w1 - w2))


class DarbouxIIIA(HamiltonianSystem):
    system_id = SystemId.DIII_A
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"a1": 0.3, "a2": 0.4, "a3": 0.2}
    default_state = (0.5, 0.3, 0.6, 0.8)
    sample_box = ((-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0), (0.3, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        w1, w2, w3, w4 = state
        return (
            w3**2
            + w4**2
            + params["a1"] * w1
            + params["a2"] * w2
            + params["a3"]
        ) / _metric(w1, w2)

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        w1, w2, w3, w4 = state
        metric = _metric(w1, w2)
        kinetic = w3**2 + w4**2
        return (
            2.0 * w3 / metric,
            2.0 * w4 / metric,
            (
                2.0 * a2 * w1 * w2
                + a1 * (w1**2 - w2**2 - 4.0)
                + 2.0 * a3 * w1
                + 2.0 * w1 * kinetic
            )
            / metric**2,
            (
                2.0 * a1 * w1 * w2
                - a2 * (w1**2 - w2**2 - 4.0)
                + 2.0 * a3 * w2
                + 2.0 * w2 * kinetic
            )
            / metric**2,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (value_of(_metric(state[0], state[1])),)


class DarbouxIIIB(HamiltonianSystem):
    system_id = SystemId.DIII_B
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"b1": 0.2, "b2": 0.3, "b3": 0.1}
    default_state = (1.0, 1.0, 0.5, 0.7)
    sample_box = ((0.5, 2.0), (0.5, 2.0), (-1.0, 1.0), (0.3, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        w1, w2, w3, w4 = state
        return (
            w3**2
            + w4**2
            + params["b1"] / w1**2
            + params["b2"] / w2**2
            + params["b3"]
        ) / _metric(w1, w2)

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        w1, w2, w3, w4 = state
        metric = _metric(w1, w2)
        kinetic = w3**2 + w4**2
        return (
            2.0 * w3 / metric,
            2.0 * w4 / metric,
            2.0
            * (
                (b2 + b3 * w2**2 + kinetic * w2**2) * w1**4
                + (w2**2 + 4.0 + 2.0 * w1**2) * b1 * w2**2
            )
            / (metric**2 * w1**3 * w2**2),
            2.0
            * (
                (b1 + b3 * w1**2 + kinetic * w1**2) * w2**4
                + (2.0 * (w2**2 + 2.0) + w1**2) * b2 * w1**2
            )
            / (metric**2 * w1**2 * w2**3),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (abs(value_of(state[0])), abs(value_of(state[1])))


class DarbouxIIIC(HamiltonianSystem):
    system_id = SystemId.DIII_C
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"c1": 1.0, "c2": 0.2, "c3": 0.1}
    default_state = (1.0, 0.5, 0.3, 0.4)
    sample_box = ((0.5, 1.5), (0.3, 1.0), (-1.0, 1.0), (-1.0, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        c1, c2, c3 = params["c1"], params["c2"], params["c3"]
        w1, w2, w3, w4 = state
        return (
            w1**2 * w3**2
            - w2**2 * w4**2
            + c1 * (w1 + w2)
            + c2 * (w1 + w2) / (w1 * w2)
            + c3 * (w1**2 - w2**2) / (w1**2 * w2**2)
        ) / ((w1 + w2) * (2.0 + w1 - w2))

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        c1, c2, c3 = params["c1"], params["c2"], params["c3"]
        w1, w2, w3, w4 = state
        shift = 2.0 + w1 - w2
        metric = (w1 + w2) * shift
        return (
            2.0 * w1**2 * w3 / metric,
            -2.0 * w2**2 * w4 / metric,
            2.0
            * (
                (w3**2 - w4**2) * w1 * w2**2
                - 2.0 * w3**2 * w1 * w2
                - w1**2 * w3**2
                - w2**2 * w4**2
            )
            / metric**2
            + c1 / shift**2
            + c2 * (2.0 * w1 - w2 + 2.0) / (shift**2 * w1**2 * w2)
            + 2.0
            * c3
            * (w1**2 - 2.0 * w1 * w2 + w1 + w2**2 - 2.0 * w2)
            / (shift**2 * w1**3 * w2**2),
            -2.0
            * (
                (w3**2 - w4**2) * w1**2 * w2
                - w3**2 * w1**2
                - (2.0 * w1 + w2) * w2 * w4**2
            )
            / metric**2
            - c1 / shift**2
            + c2 * (w1 - 2.0 * w2 + 2.0) / (shift**2 * w1 * w2**2)
            + 2.0
            * c3
            * (w1**2 - 2.0 * w1 * w2 + 2.0 * w1 + w2**2 - w2)
            / (shift**2 * w1**2 * w2**3),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return _light_cone(state)


class DarbouxIIID(HamiltonianSystem):
    system_id = SystemId.DIII_D
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"d1": 0.3, "d2": 0.2, "d3": 0.1}
    default_state = (1.0, 0.5, 0.3, 0.4)
    sample_box = ((0.5, 1.5), (0.3, 1.0), (-1.0, 1.0), (-1.0, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        d1, d2, d3 = params["d1"], params["d2"], params["d3"]
        w1, w2, w3, w4 = state
        return (
            w1**2 * w3**2
            - w2**2 * w4**2
            + d1 * w1
            + d2 * w2
            + d3 * (w1**2 + w2**2)
        ) / ((w1 + w2) * (2.0 + w1 - w2))

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        d1, d2, d3 = params["d1"], params["d2"], params["d3"]
        w1, w2, w3, w4 = state
        metric = (w1 + w2) * (2.0 + w1 - w2)
        return (
            2.0 * w1**2 * w3 / metric,
            -2.0 * w2**2 * w4 / metric,
            (
                2.0
                * (
                    w1 * w2**2 * (w3**2 - w4**2)
                    - 2.0 * w1 * w2 * w3**2
                    - w2**2 * w4**2
                    - w1**2 * w3**2
                )
                + d1 * (w1**2 + w2**2 - 2.0 * w2)
                + 2.0 * d2 * w2 * (w1 + 1.0)
                + 2.0 * d3 * (w2**2 - w1**2 + 2.0 * w1 * w2**2 - 2.0 * w1 * w2)
            )
            / metric**2,
            (
                2.0
                * (
                    w1**2 * w2 * (w4**2 - w3**2)
                    + 2.0 * w1 * w2 * w4**2
                    + w2**2 * w4**2
                    + w1**2 * w3**2
                )
                + 2.0 * d1 * w1 * (1.0 - w2)
                - d2 * (w1**2 + w2**2 + 2.0 * w1)
                - 2.0 * d3 * (w2**2 - w1**2 + 2.0 * w1**2 * w2 + 2.0 * w1 * w2)
            )
            / metric**2,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return _light_cone(state)


class DarbouxIIIE(HamiltonianSystem):
    system_id = SystemId.DIII_E
    coordinates = ("w1", "w2")
    momenta = ("w3", "w4")
    default_params = {"c": 0.2}
    default_state = (0.5, 1.0, 0.3, 0.8)
    sample_box = ((-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0), (0.3, 1.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        w1, w2, w3, w4 = state
        return (w3**2 + w4**2 + params["c"]) / _metric(w1, w2)

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        w1, w2, w3, w4 = state
        metric = _metric(w1, w2)
        energy = params["c"] + w3**2 + w4**2
        return (
            2.0 * w3 / metric,
            2.0 * w4 / metric,
            2.0 * w1 * energy / metric**2,
            2.0 * w2 * energy / metric**2,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (value_of(_metric(state[0], state[1])),)
