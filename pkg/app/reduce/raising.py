"""Order raising by elimination of constants.

A relation G(y, u, ..., u^(m); θ) = 0 holding along every solution for fixed
constants θ = (θ_1, ..., θ_k) implies an equation of order m + k free of θ:
the relation and its first k - 1 total y-derivatives are solved for θ, and the
k-th derivative then gives u^(m+k). Total derivatives are read off the Taylor
expansion of G along the curve s -> (y + s, U(s), U'(s), ...) built from the
point, so everything runs on jets and raised equations can be evaluated,
integrated and differentiated like explicit ones.
"""

import math
from collections.abc import Mapping, Sequence

from app.enums import FormVariant
from app.exceptions import ConfigError, SingularLocusError
from app.integrate.ode import OdeGuard, OdeParams, OdeSpec
from app.jets.jet import Jet, Num, as_jet, constant, jet_space, taylor_curve, value_of

from .models import Relation

_CURVE = "_s"

# Pivots smaller than this fraction of the largest entry are treated as zero
_PIVOT_FLOOR = 1e-13


def relation_of(ode: OdeSpec) -> Relation:
    """G = u^(n) - F(y, u, ..., u^(n-1)) as a relation of order n"""

    def residual(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        return derivatives[ode.order] - ode.rhs(y, derivatives[: ode.order], params)

    return Relation(ode.name, ode.order, residual, ode.guard)


def _shifted_series(coefficients: Sequence[Jet], s: Jet) -> Jet:
    """Σ c_i s^i / i!"""
    total = coefficients[0]
    power = s
    for i, c in enumerate(coefficients[1:], start=1):
        total = total + c * power / math.factorial(i)
        power = power * s
    return total


def _solve(matrix: list[list[Num]], rhs: list[Num]) -> list[Num]:
    """Gaussian elimination with partial pivoting on the values of the entries"""
    size = len(rhs)
    rows = [[*row, b] for row, b in zip(matrix, rhs, strict=True)]
    scale = max((abs(value_of(x)) for row in matrix for x in row), default=0.0)
    for col in range(size):
        pivot = max(range(col, size), key=lambda r: abs(value_of(rows[r][col])))
        if abs(value_of(rows[pivot][col])) <= _PIVOT_FLOOR * max(scale, 1.0):
            msg = "Constants to eliminate are not determined at this point"
            raise SingularLocusError(msg)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(col + 1, size):
            factor = rows[r][col] / rows[col][col]
            rows[r] = [x - factor * p for x, p in zip(rows[r], rows[col], strict=True)]
    solution: list[Num] = [0.0] * size
    for r in reversed(range(size)):
        acc = rows[r][size]
        for c in range(r + 1, size):
            acc = acc - rows[r][c] * solution[c]
        solution[r] = acc / rows[r][r]
    return solution


def _raised_highest(
    relation: Relation,
    eliminate: tuple[str, ...],
    y: Num,
    derivatives: Sequence[Num],
    params: OdeParams,
) -> Num:
    k, m = len(eliminate), relation.order
    jets = [v for v in (y, *derivatives) if isinstance(v, Jet)]
    base_order = jets[0].order if jets else 0
    variables: list[str] = []
    for j in jets:
        variables.extend(v for v in j.variables if v not in variables)
    space = jet_space((*variables, _CURVE), base_order + k)
    s = taylor_curve([0.0, 1.0], space.order, _CURVE).embed(space)

    def lift(value: Num) -> Jet:
        if isinstance(value, Jet):
            return value.embed(space)
        return constant(float(value), s)

    def lower(value: Jet) -> Num:
        return value.value if base_order == 0 else value.truncate(base_order)

    y_curve = lift(y) + s
    known = [lift(d) for d in derivatives]

    def curve(highest: float) -> list[Jet]:
        # U^(j)(s) = Σ_{i≥j} d_i s^(i-j)/(i-j)!
        coefficients = [*known, constant(highest, s)]
        return [_shifted_series(coefficients[j:], s) for j in range(m + 1)]

    def series(values: list[Jet], constants: Mapping[str, Num]) -> Jet:
        return as_jet(
            relation.residual(y_curve, values, {**params, **constants}), s
        )

    def coefficient(total: Jet, power: int) -> Num:
        return lower(total.coefficient(_CURVE, power))

    base = curve(0.0)
    at_zero = series(base, dict.fromkeys(eliminate, 0.0))
    offsets = [coefficient(at_zero, j) for j in range(k)]
    columns = []
    for name in eliminate:
        unit = {other: float(other == name) for other in eliminate}
        shifted = series(base, unit)
        columns.append(
            [coefficient(shifted, j) - offsets[j] for j in range(k)]
        )
    matrix = [[columns[i][j] for i in range(k)] for j in range(k)]
    solved = _solve(matrix, [-c for c in offsets])
    constants = {
        name: lift(value) for name, value in zip(eliminate, solved, strict=True)
    }

    c0 = coefficient(series(curve(0.0), constants), k)
    c1 = coefficient(series(curve(1.0), constants), k)
    slope = c1 - c0
    if value_of(slope) == 0.0:
        msg = f"{relation.name} does not involve the highest derivative here"
        raise SingularLocusError(msg)
    return -c0 / slope


def raise_order(
    source: Relation | OdeSpec,
    eliminate: Sequence[str],
    name: str | None = None,
    variant: FormVariant = FormVariant.DERIVED,
    guard: OdeGuard | None = None,
) -> OdeSpec:
    """Explicit ODE of order m + len(eliminate) free of the eliminated constants.
    The relation must be affine in the constants, which holds for every
    conserved quantity of the catalog. The raised equation keeps the guard of
    the relation unless another one is given, which it must be when the
    relation guard reads an eliminated constant.
    """
    relation = relation_of(source) if isinstance(source, OdeSpec) else source
    eliminate = tuple(eliminate)
    if not eliminate:
        msg = f"Nothing to eliminate from {relation.name}"
        raise ConfigError(msg)

    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        return _raised_highest(relation, eliminate, y, derivatives, params)

    return OdeSpec(
        name or f"{relation.name}_raised",
        relation.order + len(eliminate),
        rhs,
        guard=relation.guard if guard is None else guard,
        variant=variant,
    )


def extend_jet_point(
    ode: OdeSpec, y: float, derivatives: Sequence[float], extra: int
) -> list[float]:
    """(u, ..., u^(n-1)) completed with u^(n), ..., u^(n-1+extra) by
    differentiating the equation along its own solution.
    """
    values = [float(d) for d in derivatives]
    for j in range(extra):
        y_curve = taylor_curve([y, 1.0], j)
        curves = [taylor_curve(values[i:], j) for i in range(ode.order)]
        highest = as_jet(ode.evaluate(y_curve, curves), y_curve)
        values.append(float(highest.derivatives()[j]))
    return values
