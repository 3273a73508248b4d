"""Abstract Hamiltonian system module"""

from abc import ABC, abstractmethod
from collections.abc import Mapping

import numpy as np

from app.config import settings
from app.exceptions import ConfigError, DomainGuardError
from app.jets.jet import Jet, Num, seed_all, value_of

from .enums import SystemId
from .models import Params, State, StateLike


class HamiltonianSystem(ABC):
    """Generic two degrees of freedom Hamiltonian system, in canonical
    coordinates (q1, q2, p1, p2). Concrete systems give the Hamiltonian as a
    formula accepting floats or jets, the Hamilton equations exactly as they are
    displayed in closed form, and the strict inequalities defining their domain.
    The symplectic gradient computed from the Hamiltonian through jets is the
    ground truth used for integration.
    """

    # Index of the cyclic coordinate, if the Hamiltonian does not depend on one
    cyclic_index: int | None = None

    @property
    @classmethod
    @abstractmethod
    def system_id(cls) -> SystemId:
        """Identifier of the system in the catalog"""

    @property
    @classmethod
    @abstractmethod
    def coordinates(cls) -> tuple[str, str]:
        """Names of the two coordinates"""

    @property
    @classmethod
    @abstractmethod
    def momenta(cls) -> tuple[str, str]:
        """Names of the two conjugate momenta"""

    @property
    @classmethod
    @abstractmethod
    def default_params(cls) -> dict[str, float]:
        """Default value of every parameter of the family"""

    @property
    @classmethod
    @abstractmethod
    def default_state(cls) -> tuple[float, float, float, float]:
        """Initial state inside the domain, reduction coordinate monotone"""

    @property
    @classmethod
    @abstractmethod
    def sample_box(cls) -> tuple[tuple[float, float], ...]:
        """Box of the phase space in which random interior states are drawn"""

    @abstractmethod
    def hamiltonian(self, params: Params, state: StateLike) -> Num:
        """Hamiltonian exactly as displayed for the family"""

    def displayed_rhs(
        self, params: Params, state: StateLike
    ) -> tuple[Num, ...] | None:
        """Hamilton equations (q1', q2', p1', p2') as displayed for the family,
        None when only the Hamiltonian is given in closed form.
        """
        return None

    @abstractmethod
    def guards(self, params: Params, state: StateLike) -> tuple[float, ...]:
        """Quantities which must stay strictly positive inside the domain"""

    @property
    def parameters(self) -> tuple[str, ...]:
        return tuple(self.default_params)

    @property
    def state_labels(self) -> tuple[str, ...]:
        return self.coordinates + self.momenta

    def bind_params(
        self, params: Mapping[str, float] | None = None
    ) -> dict[str, float]:
        bound = dict(self.default_params)
        if params is None:
            return bound
        unknown = set(params) - set(bound)
        if unknown:
            msg = (
                f"Unknown parameters {sorted(unknown)} for {self.system_id}, "
                f"expected some of {list(bound)}"
            )
            raise ConfigError(msg)
        bound.update({name: float(value) for name, value in params.items()})
        return bound

    def guard_margin(self, params: Params, state: StateLike) -> float:
        return min(self.guards(params, state))

    def check_domain(self, params: Params, state: StateLike) -> None:
        margin = self.guard_margin(params, [value_of(v) for v in state])
        if not margin > settings.guard_margin:
            msg = (
                f"State {[value_of(v) for v in state]} outside of the "
                f"{self.system_id} domain (guard margin {margin:.3e})"
            )
            raise DomainGuardError(msg)

    def energy(self, params: Params, state: State) -> float:
        self.check_domain(params, state)
        return value_of(self.hamiltonian(params, state))

    def symplectic_gradient(self, params: Params, state: State) -> np.ndarray:
        """(dH/dp1, dH/dp2, -dH/dq1, -dH/dq2) through first order jets"""
        self.check_domain(params, state)
        names = self.state_labels
        energy = self.hamiltonian(params, seed_all(names, state, 1))
        if not isinstance(energy, Jet):
            return np.zeros(4)
        gradient = np.array([energy.partial(name) for name in names])
        return np.concatenate((gradient[2:], -gradient[:2]))

    def hamilton_rhs(self, params: Params, state: State) -> np.ndarray:
        self.check_domain(params, state)
        displayed = self.displayed_rhs(params, state)
        if displayed is None:
            return self.symplectic_gradient(params, state)
        return np.array([value_of(v) for v in displayed])

    def cyclic_momentum(self, state: StateLike) -> float | None:
        if self.cyclic_index is None:
            return None
        return value_of(state[2 + self.cyclic_index])

    def sample_state(self, params: Params, rng: np.random.Generator) -> State:
        """Random state of the sample box inside the domain"""
        lows, highs = np.array(self.sample_box).T
        for _ in range(1000):
            state = rng.uniform(lows, highs)
            if self.guard_margin(params, state) > settings.window_margin:
                return state
        msg = f"No admissible state found in the sample box of {self.system_id}"
        raise DomainGuardError(msg)
