"""Superintegrable systems on the Darboux space of type I, with coordinates
(u, v) and kinetic term (p_u² + p_v²) / 4u.
"""

from app.jets.jet import Num, value_of

from .base import HamiltonianSystem
from .enums import SystemId
from .models import Params, StateLike

_BOX = ((0.5, 2.0), (0.5, 2.0), (-1.0, 1.0), (0.5, 1.5))


def _kinetic(u: Num, p_u: Num, p_v: Num) -> Num:
    return (p_u**2 + p_v**2) / (4.0 * u)


class DarbouxI1(HamiltonianSystem):
    system_id = SystemId.DI_1
    coordinates = ("u", "v")
    momenta = ("p_u", "p_v")
    default_params = {"b1": 0.3, "b2": 0.2, "b3": 0.05}
    default_state = (1.0, 1.0, 0.1, 1.0)
    sample_box = _BOX

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        u, v, p_u, p_v = state
        return (
            _kinetic(u, p_u, p_v)
            + b1 * (4.0 * u**2 + v**2) / (4.0 * u)
            + b2 / u
            + b3 / (u * v**2)
        )

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        b1, b2, b3 = params["b1"], params["b2"], params["b3"]
        u, v, p_u, p_v = state
        return (
            p_u / (2.0 * u),
            p_v / (2.0 * u),
            (
                v**2 * (p_u**2 + p_v**2)
                + b1 * v**2 * (v**2 - 4.0 * u**2)
                + 4.0 * b2 * v**2
                + 4.0 * b3
            )
            / (4.0 * u**2 * v**2),
            (4.0 * b3 - b1 * v**4) / (2.0 * u * v**3),
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (value_of(state[0]), abs(value_of(state[1])))


class DarbouxI2(HamiltonianSystem):
    system_id = SystemId.DI_2
    coordinates = ("u", "v")
    momenta = ("p_u", "p_v")
    default_params = {"a1": 0.2, "a2": 0.5, "a3": 0.1}
    default_state = (1.0, 0.5, 0.1, 1.5)
    sample_box = ((0.5, 2.0), (-1.0, 1.0), (-1.0, 1.0), (0.5, 1.5))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        u, v, p_u, p_v = state
        return (
            _kinetic(u, p_u, p_v)
            + a1 / u
            + a2 * v / u
            + a3 * (u**2 + v**2) / u
        )

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        a1, a2, a3 = params["a1"], params["a2"], params["a3"]
        u, v, p_u, p_v = state
        return (
            p_u / (2.0 * u),
            p_v / (2.0 * u),
            (
                p_u**2
                + p_v**2
                + 4.0 * a1
                + 4.0 * a2 * v**2
                - 4.0 * a3 * (u**2 - v**2)
            )
            / (4.0 * u**2),
            -(a2 + 2.0 * a3 * v) / u,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (value_of(state[0]),)


class DarbouxI3(HamiltonianSystem):
    system_id = SystemId.DI_3
    coordinates = ("u", "v")
    momenta = ("p_u", "p_v")
    cyclic_index = 1
    default_params = {"a": 0.2}
    default_state = (1.0, 0.0, 0.1, 1.0)
    sample_box = ((0.5, 2.0), (-2.0, 2.0), (-1.0, 1.0), (0.5, 2.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        u, _, p_u, p_v = state
        return _kinetic(u, p_u, p_v) + params["a"] / u

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        u, _, p_u, p_v = state
        return (
            p_u / (2.0 * u),
            p_v / (2.0 * u),
            (4.0 * params["a"] + p_u**2 + p_v**2) / (4.0 * u**2),
            0.0,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (value_of(state[0]),)
