"""Linearizations of the Perlick systems and of Taub-NUT, in the polar angle"""

from collections.abc import Sequence

from app.enums import FormVariant
from app.integrate.ode import OdeParams
from app.jets import functions as fn
from app.jets.jet import Jet, Num
from app.systems.enums import SystemId

from .models import LinearizationChain, Transform, linear_target


# Perlick I


def _perlick_i_offset(x: Jet, v: Jet, params: OdeParams) -> Num:
    return params["k"] * v - 1.0 / v - params["A"] / params["w"] ** 2


def _perlick_i_tan(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    return fn.tan(x), _perlick_i_offset(x, v, params) / fn.cos(x)


def _perlick_i_harmonic(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    return x, _perlick_i_offset(x, v, params)


def _free_particle(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return 0.0 * derivatives[1]


def _harmonic(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return -derivatives[0]


PERLICK_I_CHAINS = (
    LinearizationChain(
        "free_particle",
        "second_order",
        (Transform("tan", _perlick_i_tan),),
        linear_target("free_particle", 2, _free_particle),
    ),
    LinearizationChain(
        "harmonic",
        "second_order",
        (Transform("offset", _perlick_i_harmonic),),
        linear_target("harmonic", 2, _harmonic),
    ),
)


# Perlick II


def _perlick_ii_third(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    return x, (1.0 + params["lam"] ** 2 * v**4) / (2.0 * v**2)


def _perlick_ii_second(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    lam, delta = params["lam"], params["delta"]
    return x, fn.sqrt(1.0 + lam**2 * v**4 - 2.0 * delta * v**2) / v


def _perlick_ii_target(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return -4.0 * derivatives[1]


PERLICK_II_CHAINS = (
    LinearizationChain(
        "third_order",
        "third_order",
        (Transform("conformal_radius", _perlick_ii_third),),
        linear_target("third_order", 3, _perlick_ii_target),
    ),
    LinearizationChain(
        "second_order",
        "second_order_derived",
        (Transform("conformal_inverse", _perlick_ii_second),),
        linear_target("harmonic", 2, _harmonic),
        preset="linearizable",
    ),
)


# Taub-NUT


def _taub_nut_canonical(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    return fn.tan(x), -1.0 / (v * fn.cos(x))


def _taub_nut_reciprocal(x: Jet, v: Jet, params: OdeParams) -> tuple[Num, Num]:
    return x, -1.0 / v


def _canonical_target(power: int):
    def rhs(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
        return -3.0 * y**power * derivatives[2] / (1.0 + y**2)

    return rhs


def _unit_frequency(y: Num, derivatives: Sequence[Num], params: OdeParams) -> Num:
    return -derivatives[1]


TAUB_NUT_CHAINS = (
    LinearizationChain(
        "canonical",
        "third_order",
        (Transform("tan", _taub_nut_canonical),),
        linear_target("canonical", 3, _canonical_target(2)),
        fallback="canonical_derived",
    ),
    LinearizationChain(
        "canonical_derived",
        "third_order",
        (Transform("tan", _taub_nut_canonical),),
        linear_target("canonical_derived", 3, _canonical_target(1)),
        variant=FormVariant.DERIVED,
    ),
    LinearizationChain(
        "harmonic",
        "third_order",
        (Transform("reciprocal", _taub_nut_reciprocal),),
        linear_target("unit_frequency", 3, _unit_frequency),
    ),
)


CHAINS: dict[SystemId, tuple[LinearizationChain, ...]] = {
    SystemId.PERLICK_I: PERLICK_I_CHAINS,
    SystemId.PERLICK_II: PERLICK_II_CHAINS,
    SystemId.TAUB_NUT: TAUB_NUT_CHAINS,
}
