"""Perlick type I and type II systems, and the Taub-NUT system"""

import math

from app.jets.jet import Num, value_of

from .base import HamiltonianSystem
from .enums import SystemId
from .models import Params, StateLike


class PerlickI(HamiltonianSystem):
    system_id = SystemId.PERLICK_I
    coordinates = ("r", "theta")
    momenta = ("p_r", "p_theta")
    cyclic_index = 1
    default_params = {"k": 0.5, "A": -0.5}
    default_state = (1.0, 0.0, 0.1, 1.0)
    sample_box = ((0.5, 2.0), (-math.pi, math.pi), (-1.0, 1.0), (0.5, 2.0))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        k, big_a = params["k"], params["A"]
        r, _, p_r, p_theta = state
        factor = (1.0 + k * r**2) ** 2
        return factor / 2.0 * (p_r**2 + p_theta**2 / r**2) + big_a * (
            1.0 - k * r**2
        ) / r

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        k, big_a = params["k"], params["A"]
        r, _, p_r, p_theta = state
        factor = (1.0 + k * r**2) ** 2
        return (
            p_r * factor,
            p_theta * factor / r**2,
            ((1.0 - k * r**2) * p_theta**2 - 2.0 * k * r**4 * p_r**2 + big_a * r)
            * (1.0 + k * r**2)
            / r**3,
            0.0,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        return (value_of(state[0]),)


class PerlickII(HamiltonianSystem):
    system_id = SystemId.PERLICK_II
    coordinates = ("r", "theta")
    momenta = ("p_r", "p_theta")
    cyclic_index = 1
    default_params = {"lam": 0.3, "delta": 0.2, "B": 0.35}
    default_state = (1.0, 0.0, 0.05, 1.0)
    sample_box = ((0.5, 1.5), (-math.pi, math.pi), (-1.0, 1.0), (0.5, 2.0))

    @staticmethod
    def conformal_denominator(params: Params, r: Num) -> Num:
        return 1.0 + params["lam"] ** 2 * r**4 - 2.0 * params["delta"] * r**2

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        lam = params["lam"]
        r, _, p_r, p_theta = state
        denominator = self.conformal_denominator(params, r)
        return (1.0 - lam**2 * r**4) ** 2 / (2.0 * denominator) * (
            p_r**2 + p_theta**2 / r**2
        ) + params["B"] * r**2 / denominator

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        lam, delta, big_b = params["lam"], params["delta"], params["B"]
        r, _, p_r, p_theta = state
        denominator = self.conformal_denominator(params, r)
        edge = 1.0 - lam**2 * r**4
        return (
            p_r * edge**2 / denominator,
            p_theta * edge**2 / (r**2 * denominator),
            edge
            / (r**3 * denominator**2)
            * (
                2.0
                * r**2
                * p_r**2
                * (
                    lam**4 * r**6
                    + 3.0 * lam**2 * r**2
                    - delta
                    - 3.0 * delta * lam**2 * r**4
                )
                + p_theta**2
                * (
                    1.0
                    + lam**4 * r**8
                    + 6.0 * lam**2 * r**4
                    - 4.0 * delta * lam**2 * r**6
                    - 4.0 * delta * r**2
                )
                - 2.0 * big_b * r**4
            ),
            0.0,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        r = value_of(state[0])
        return (
            r,
            self.conformal_denominator(params, r),
            abs(1.0 - params["lam"] ** 2 * r**4),
        )


class TaubNut(HamiltonianSystem):
    system_id = SystemId.TAUB_NUT
    coordinates = ("r", "phi")
    momenta = ("p_r", "p_phi")
    cyclic_index = 1
    default_params = {"eta": 1.0, "alpha": 0.5}
    default_state = (1.0, 0.0, 0.1, 1.0)
    sample_box = ((0.5, 2.0), (-math.pi, math.pi), (-1.0, 1.0), (0.5, 1.5))

    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        eta, alpha = params["eta"], params["alpha"]
        r, _, p_r, p_phi = state
        return 0.5 * r / (eta + r) * (p_r**2 + p_phi**2 / r**2) - alpha / (eta + r)

    def displayed_rhs(self, params: Params, state: StateLike) -> tuple[Num, ...]:
        eta, alpha = params["eta"], params["alpha"]
        r, _, p_r, p_phi = state
        return (
            r * p_r / (eta + r),
            p_phi / ((eta + r) * r),
            -(2.0 * (alpha * r - p_phi**2) * r + eta * (r**2 * p_r**2 - p_phi**2))
            / (2.0 * (eta + r) ** 2 * r**2),
            0.0,
        )

    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        r = value_of(state[0])
        return (r, params["eta"] + r)
