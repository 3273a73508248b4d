"""Second order linearizations of the Darboux I reductions through s = sqrt(u),
valid on the linearizability preset of each case. Their linear third order
equations need no change of variables.
"""

from collections.abc import Sequence

from app.integrate.ode import OdeParams
from app.jets import functions as fn
from app.jets.jet import Num
from app.systems.enums import SystemId

from .models import LinearizationChain, Transform, linear_target

_ROOT = Transform("root", lambda x, v, params: (x, fn.sqrt(v)))


def _d1_radicand(y: Num, params: OdeParams) -> Num:
    b1, b3, w0 = params["b1"], params["b3"], params["w0"]
    return 2.0 * w0 * b1 * y**2 - b1 * y**4 - 8.0 * w0 * b3 * y**2 - 4.0 * b3


def _d1_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    b1, b3 = params["b1"], params["b3"]
    s, ds = derivatives
    return ((b1 * y**4 - 4.0 * b3) * ds / y - b1 * y**2 * s) / _d1_radicand(
        y, params
    )


def _d2_edge(y: Num, params: OdeParams) -> Num:
    return params["a2"] * params["w0"] - params["a2"] * y - params["a3"] * y**2


def _d2_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    a2, a3 = params["a2"], params["a3"]
    s, ds = derivatives
    edge = _d2_edge(y, params)
    return (a2 + 2.0 * a3 * y) * ds / (2.0 * edge) - a3 * s / (4.0 * edge)


def _d3_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return 0.0 * derivatives[1]


def _guarded(radicand):
    def guard(y: float, derivatives: Sequence[float], params: OdeParams) -> float:
        return min(abs(y), abs(radicand(y, params)))

    return guard


CHAINS: dict[SystemId, tuple[LinearizationChain, ...]] = {
    SystemId.DI_1: (
        LinearizationChain(
            "second_order",
            "second_order_derived",
            (_ROOT,),
            linear_target(
                "second_order", 2, _d1_target, guard=_guarded(_d1_radicand)
            ),
            preset="linearizable",
        ),
    ),
    SystemId.DI_2: (
        LinearizationChain(
            "second_order",
            "second_order",
            (_ROOT,),
            linear_target(
                "second_order",
                2,
                _d2_target,
                guard=lambda y, d, p: abs(_d2_edge(y, p)),
            ),
            preset="linearizable",
        ),
    ),
    SystemId.DI_3: (
        LinearizationChain(
            "second_order",
            "second_order",
            (_ROOT,),
            linear_target("free_particle", 2, _d3_target),
            preset="linearizable",
        ),
    ),
}
