"""Explicit scalar ODEs u^(n) = F(y, u, u', ..., u^(n-1)) and their integration
as first order systems.
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field, replace

import numpy as np

from app.config import settings
from app.enums import FormVariant
from app.exceptions import JetOrderError, SingularLocusError
from app.jets.jet import Num, value_of

from .solver import integrate
from .trajectory import Trajectory

type OdeParams = Mapping[str, float]
type OdeRhs = Callable[[Num, Sequence[Num], OdeParams], Num]
type OdeGuard = Callable[[float, Sequence[float], OdeParams], float]

MAX_ODE_ORDER = 4


def derivative_labels(unknown: str, variable: str, count: int) -> tuple[str, ...]:
    """("u", "du_dy", "d2u_dy2", ...) for the first `count` derivatives"""
    labels = [unknown]
    for k in range(1, count):
        power = "" if k == 1 else str(k)
        labels.append(f"d{power}{unknown}_d{variable}{power}")
    return tuple(labels)


@dataclass(frozen=True)
class OdeSpec:
    """Scalar ODE of order 1..4. The right-hand side receives the independent
    variable, the derivatives (u, u', ..., u^(n-1)) and the parameters, as
    floats or jets. The guard returns a margin which must stay positive.
    """

    name: str
    order: int
    rhs: OdeRhs
    params: OdeParams = field(default_factory=dict)
    guard: OdeGuard | None = None
    variant: FormVariant = FormVariant.DISPLAYED
    variable: str = "y"
    unknown: str = "u"
    # Right-hand side affine in (u, u', ..., u^(n-1))
    linear: bool = False

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ODE_ORDER:
            msg = f"ODE order {self.order} outside of 1..{MAX_ODE_ORDER}"
            raise JetOrderError(msg)

    @property
    def labels(self) -> tuple[str, ...]:
        return derivative_labels(self.unknown, self.variable, self.order)

    def margin(self, y: float, derivatives: Sequence[float]) -> float:
        if self.guard is None:
            return np.inf
        return self.guard(y, derivatives, self.params)

    def evaluate(self, y: Num, derivatives: Sequence[Num]) -> Num:
        """Highest derivative u^(n) at a point of the jet space"""
        if len(derivatives) != self.order:
            msg = (
                f"{self.name} expects {self.order} derivatives, got {len(derivatives)}"
            )
            raise JetOrderError(msg)
        margin = self.margin(value_of(y), [value_of(d) for d in derivatives])
        if not margin > settings.guard_margin:
            msg = f"{self.name} evaluated on its singular locus (margin {margin:.3e})"
            raise SingularLocusError(msg)
        return self.rhs(y, derivatives, self.params)

    def with_params(self, **params: float) -> "OdeSpec":
        return replace(self, params={**self.params, **params})


def integrate_ode(
    ode: OdeSpec,
    init: Sequence[float],
    span: tuple[float, float],
    tol: float | None = None,
) -> Trajectory:
    """Integrate the ODE as the first order system (u, u', ..., u^(n-1))"""
    if len(init) != ode.order:
        msg = f"{ode.name} needs {ode.order} initial values, got {len(init)}"
        raise JetOrderError(msg)

    def vector_field(y: float, state: np.ndarray) -> np.ndarray:
        highest = value_of(ode.evaluate(y, list(state)))
        return np.append(state[1:], highest)

    return integrate(
        vector_field,
        init,
        span,
        tol,
        guard=lambda y, state: ode.margin(y, state),
        labels=ode.labels,
    )
