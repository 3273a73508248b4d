"""Value types of the linearizations: changes of variables and the chains
leading a reduced equation to a linear target.
"""

from collections.abc import Callable
from dataclasses import dataclass

from app.enums import ChainSource, FormVariant
from app.exceptions import ConfigError
from app.integrate.ode import OdeGuard, OdeParams, OdeRhs, OdeSpec
from app.jets.jet import Jet, Num

# (x, v, params) -> (X, V), applied to jets along a solution curve
type TransformMap = Callable[[Jet, Jet, OdeParams], tuple[Num, Num]]


@dataclass(frozen=True)
class Transform:
    """Change of variables (y, u) -> (Y, U). Point transformations only read
    the values of x and v, substitutions also consume derivatives of v and
    lower the order of the resulting jets by `order_loss`.
    """

    name: str
    map: TransformMap
    order_loss: int = 0

    @property
    def is_point(self) -> bool:
        return self.order_loss == 0


@dataclass(frozen=True)
class LinearizationChain:
    """Stages taking the solutions of a reduced form to those of a linear
    equation. Conditional chains only hold on the linearizability preset of
    their case and double as negative controls off it.
    """

    name: str
    form: str
    stages: tuple[Transform, ...]
    target: OdeSpec
    source: ChainSource = ChainSource.REDUCED
    preset: str | None = None
    variant: FormVariant = FormVariant.DISPLAYED
    fallback: str | None = None

    def __post_init__(self):
        if not self.target.linear:
            msg = (
                f"Target {self.target.name} of chain {self.name} is not flagged linear"
            )
            raise ConfigError(msg)

    @property
    def conditional(self) -> bool:
        return self.preset is not None

    @property
    def order_loss(self) -> int:
        return sum(stage.order_loss for stage in self.stages)

    @property
    def source_order(self) -> int:
        """Highest derivative of the reduced solution the chain consumes"""
        return self.target.order + self.order_loss


def linear_target(
    name: str, order: int, rhs: OdeRhs, guard: OdeGuard | None = None
) -> OdeSpec:
    """Linear equation U^(n) = F(Y, U, ..., U^(n-1)) reached by a chain"""
    return OdeSpec(
        name, order, rhs, guard=guard, variable="Y", unknown="U", linear=True
    )
