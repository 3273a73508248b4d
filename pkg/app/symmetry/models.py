"""Value types of the symmetry checks: point symmetries, jet points and the
generator families claimed for a reduced form.
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass

from app.exceptions import UnknownCaseError
from app.integrate.ode import OdeParams
from app.jets.jet import Num
from app.systems.enums import SystemId

# (y, u, params) -> coefficient, evaluated on floats or jets
type Coefficient = Callable[[Num, Num, OdeParams], Num]

# (y, u, params) -> margin, positive off the singular locus of a generator
type CoefficientGuard = Callable[[float, float, OdeParams], float]

# params -> coefficients of a generator in terms of others of its family
type Combination = Callable[[OdeParams], Mapping[str, float]]


def _zero(y: Num, u: Num, params: OdeParams) -> Num:
    return 0.0


@dataclass(frozen=True)
class PointSymmetry:
    """Vector field ξ(y, u) ∂_y + η(y, u) ∂_u"""

    label: str
    xi: Coefficient = _zero
    eta: Coefficient = _zero
    guard: CoefficientGuard | None = None

    def margin(self, y: float, u: float, params: OdeParams) -> float:
        if self.guard is None:
            return float("inf")
        return self.guard(y, u, params)


@dataclass(frozen=True)
class JetPoint:
    """Point (y, u, u', ..., u^(n-1)) of the jet space of an equation of
    order n
    """

    y: float
    derivatives: tuple[float, ...]

    @property
    def u(self) -> float:
        return self.derivatives[0]


@dataclass(frozen=True)
class GeneratorIdentity:
    """Generator of a family written as a combination of other ones"""

    label: str
    combination: Combination


@dataclass(frozen=True)
class SymmetryFamily:
    """Generators claimed for a reduced form of a case, with the algebraic
    relations claimed between them. `box` bounds the sampled jet points, one
    range for y then one per derivative u, u', ..., u^(n-1).
    """

    name: str
    system_id: SystemId
    form: str
    generators: tuple[PointSymmetry, ...]
    box: tuple[tuple[float, float], ...]
    abelian_pairs: tuple[tuple[str, str], ...] = ()
    closure_sets: tuple[tuple[str, ...], ...] = ()
    identities: tuple[GeneratorIdentity, ...] = ()
    # Chain whose first stage is claimed to straighten an abelian pair into
    # ∂_U, Y ∂_U, with the labels of that pair
    canonical_chain: str | None = None
    canonical_pair: tuple[str, str] | None = None

    def generator(self, label: str) -> PointSymmetry:
        for generator in self.generators:
            if generator.label == label:
                return generator
        msg = f"No generator {label!r} in {self.name}"
        raise UnknownCaseError(msg)

    def subset(self, labels: Sequence[str]) -> tuple[PointSymmetry, ...]:
        return tuple(self.generator(label) for label in labels)
