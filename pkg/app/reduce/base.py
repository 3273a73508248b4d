"""Abstract reduction module"""

from abc import ABC, abstractmethod
from collections.abc import Sequence

import numpy as np

from app.exceptions import UnknownCaseError
from app.integrate.reparametrize import StateFunction, time_taylor_derivatives
from app.systems.base import HamiltonianSystem
from app.systems.catalog import get_system
from app.systems.enums import SystemId
from app.systems.models import Params

from .models import ClosureFormula, Preset, ReducedForm, ReducedRate


class ReductionCase(ABC):
    """Reduction of one superintegrable system to scalar ODEs: a coordinate
    of the configuration space is taken as independent variable, the
    conserved quantities are fixed from the initial state and the remaining
    phase space variables are eliminated through closures.
    """

    # Time window over which the full system is integrated from its default state
    time_span: tuple[float, float] = (0.0, 0.5)

    @property
    @classmethod
    @abstractmethod
    def system_id(cls) -> SystemId:
        """Identifier of the reduced system"""

    @abstractmethod
    def constants(self, params: Params, state: Sequence[float]) -> dict[str, float]:
        """Reduction constants (energy, cyclic momentum, separation constants)
        determined by the initial state.
        """

    @abstractmethod
    def forms(self) -> tuple[ReducedForm, ...]:
        """Reduced scalar equations, displayed and derived"""

    def closures(self) -> tuple[ClosureFormula, ...]:
        return ()

    def rates(self) -> tuple[ReducedRate, ...]:
        return ()

    def presets(self) -> tuple[Preset, ...]:
        return ()

    @property
    def system(self) -> HamiltonianSystem:
        return get_system(self.system_id)

    def form(self, name: str) -> ReducedForm:
        for form in self.forms():
            if form.name == name:
                return form
        msg = (
            f"No reduced form {name!r} for {self.system_id}, "
            f"expected one of {[f.name for f in self.forms()]}"
        )
        raise UnknownCaseError(msg)

    def preset(self, name: str) -> Preset:
        for preset in self.presets():
            if preset.name == name:
                return preset
        msg = f"No preset {name!r} for {self.system_id}"
        raise UnknownCaseError(msg)

    def bound_constants(
        self, params: Params, state: Sequence[float]
    ) -> dict[str, float]:
        """Parameters merged with the reduction constants, ready to bind"""
        state = [float(v) for v in state]
        return {**params, **self.constants(params, state)}

    def slope_sign(
        self,
        params: Params,
        state: Sequence[float],
        independent: StateFunction,
        dependent: StateFunction,
    ) -> float:
        """Sign of the first y-derivative of the dependent function, which
        selects the branch of a quadrature.
        """
        derivatives = time_taylor_derivatives(
            self.system_id, params, state, independent, dependent, 1
        )
        return float(np.sign(derivatives[1]) or 1.0)
