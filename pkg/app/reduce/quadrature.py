"""First order reductions u' = ±sqrt(N / D) obtained from a separated
conserved quantity, together with the implicit relation D u'² - N = 0 they
come from. The relation is affine in the conserved constants, which makes it
the starting point of every raised form.
"""

from collections.abc import Callable, Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams, OdeSpec
from app.integrate.reparametrize import StateFunction
from app.jets import functions as fn
from app.jets.jet import Num, value_of

from .models import ReducedForm, Relation

type QuadraturePart = Callable[[Num, Num, OdeParams], Num]

# Name of the reduction constant holding the branch of the square root
SIGN = "sign"


def quadrature(
    name: str,
    numerator: QuadraturePart,
    denominator: QuadraturePart,
    independent: StateFunction,
    dependent: StateFunction,
    variant: FormVariant = FormVariant.DERIVED,
) -> tuple[ReducedForm, Relation]:
    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        u = derivatives[0]
        ratio = numerator(y, u, params) / denominator(y, u, params)
        return params[SIGN] * fn.sqrt(ratio)

    def radicand(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
        u = derivatives[0]
        bottom = value_of(denominator(y, u, params))
        if bottom == 0.0:
            return 0.0
        return min(abs(bottom), value_of(numerator(y, u, params)) / bottom)

    def bottom(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
        return abs(value_of(denominator(y, derivatives[0], params)))

    def residual(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        u, du = derivatives
        return denominator(y, u, params) * du**2 - numerator(y, u, params)

    ode = OdeSpec(name, 1, rhs, guard=radicand, variant=variant)
    relation = Relation(f"{name}_relation", 1, residual, guard=bottom)
    return ReducedForm(ode, independent, dependent), relation
