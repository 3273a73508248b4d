"""Value types of the reductions: implicit relations, reduced forms, closures,
reduced rates and linearizability presets.
"""

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from app.config import settings
from app.enums import FormVariant
from app.exceptions import JetOrderError, RadicandError
from app.integrate.ode import OdeGuard, OdeParams, OdeSpec
from app.integrate.reparametrize import StateFunction
from app.jets.jet import Num, value_of

type RelationResidual = Callable[[Num, Sequence[Num], OdeParams], Num]

# Formula in the full phase space, parameters and reduction constants merged
type StateFormula = Callable[[Sequence[Num], OdeParams], Num]

# Linearizability condition, zero when it holds
type PresetCondition = Callable[[OdeParams], float]


@dataclass(frozen=True)
class Relation:
    """Implicit equation G(y, u, u', ..., u^(m)) = 0 of order m"""

    name: str
    order: int
    residual: RelationResidual
    guard: OdeGuard | None = None

    def evaluate(self, y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        if len(derivatives) != self.order + 1:
            msg = (
                f"{self.name} expects {self.order + 1} derivatives, "
                f"got {len(derivatives)}"
            )
            raise JetOrderError(msg)
        return self.residual(y, derivatives, params)


@dataclass(frozen=True)
class ReducedForm:
    """Scalar ODE satisfied by the dependent state function against the
    independent one along every trajectory. The ODE is stored unbound, the
    parameters of the system and the reduction constants are merged into it
    when a case is evaluated.
    """

    ode: OdeSpec
    independent: StateFunction
    dependent: StateFunction
    # Lower order relation and the constants eliminated to obtain this form
    derivation: Relation | None = None
    eliminate: tuple[str, ...] = ()
    # Name of the form to evaluate instead when this one is inconsistent
    fallback: str | None = None
    # Comparable with the reparametrized Hamiltonian flow
    compare_full: bool = True

    @property
    def name(self) -> str:
        return self.ode.name

    @property
    def variant(self) -> FormVariant:
        return self.ode.variant

    @property
    def order(self) -> int:
        return self.ode.order


@dataclass(frozen=True)
class ReducedRate:
    """Displayed y-derivative of a phase space function, compared with the
    ratio of time derivatives along the flow.
    """

    name: str
    independent: StateFunction
    dependent: StateFunction
    rate: StateFormula
    variant: FormVariant = FormVariant.DISPLAYED
    fallback: str | None = None


@dataclass(frozen=True)
class ClosureFormula:
    """Expression of a phase space quantity through the others and the
    conserved constants. Branch closures are ±sqrt(radicand), the sign being
    fixed by the actual value at the start of each segment.
    """

    name: str
    actual: StateFunction
    formula: StateFormula
    branch: bool = False
    variant: FormVariant = FormVariant.DISPLAYED
    fallback: str | None = None

    def evaluate(
        self, state: Sequence[float], params: OdeParams, sign: float = 1.0
    ) -> float:
        value = value_of(self.formula(state, params))
        if not self.branch:
            return value
        if value < -settings.guard_margin:
            raise RadicandError(self.name, value)
        return sign * math.sqrt(max(value, 0.0))


@dataclass(frozen=True)
class Preset:
    """Parameter value making a conditional linearization apply, solved from
    the condition for one parameter of the system.
    """

    name: str
    parameter: str
    condition: PresetCondition
    description: str = ""
