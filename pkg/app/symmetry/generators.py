"""Generators claimed for the reduced forms, grouped by family"""

from collections.abc import Callable
from functools import cache

from app.integrate.ode import OdeParams
from app.jets import functions as fn
from app.jets.jet import Num
from app.systems.catalog import parse_system_id
from app.systems.enums import SystemId

from .models import GeneratorIdentity, PointSymmetry, SymmetryFamily

type Components = Callable[[Num, Num, OdeParams], tuple[Num, Num]]


def _one(y: Num, u: Num, params: OdeParams) -> Num:
    return 1.0


# Perlick I


def _perlick_i_profile(u: Num, params: OdeParams) -> Num:
    return u**2 / (1.0 + params["k"] * u**2)


PERLICK_I = SymmetryFamily(
    "perlick_i_abelian",
    SystemId.PERLICK_I,
    "second_order",
    (
        PointSymmetry(
            "Gamma_7", eta=lambda y, u, p: fn.cos(y) * _perlick_i_profile(u, p)
        ),
        PointSymmetry(
            "Gamma_8", eta=lambda y, u, p: fn.sin(y) * _perlick_i_profile(u, p)
        ),
    ),
    box=((-1.0, 1.0), (0.5, 2.0), (-1.0, 1.0)),
    abelian_pairs=(("Gamma_7", "Gamma_8"),),
    canonical_chain="free_particle",
    canonical_pair=("Gamma_7", "Gamma_8"),
)


# Taub-NUT


def _taub_nut_weight(u: Num, params: OdeParams) -> Num:
    return u * (params["eta"] + u) / params["eta"]


def _eta_guard(y: float, u: float, params: OdeParams) -> float:
    return abs(params["eta"])


TAUB_NUT_SECOND = SymmetryFamily(
    "taub_nut_second_order",
    SystemId.TAUB_NUT,
    "second_order",
    (
        PointSymmetry("Theta_1", xi=_one),
        PointSymmetry(
            "Theta_2",
            xi=lambda y, u, p: fn.cos(y),
            eta=lambda y, u, p: _taub_nut_weight(u, p) * fn.sin(y),
            guard=_eta_guard,
        ),
        PointSymmetry(
            "Theta_3",
            xi=lambda y, u, p: fn.sin(y),
            eta=lambda y, u, p: -_taub_nut_weight(u, p) * fn.cos(y),
            guard=_eta_guard,
        ),
    ),
    box=((-1.0, 1.0), (0.5, 2.0), (-1.0, 1.0)),
    closure_sets=(("Theta_1", "Theta_2", "Theta_3"),),
)

TAUB_NUT_THIRD = SymmetryFamily(
    "taub_nut_third_order",
    SystemId.TAUB_NUT,
    "third_order",
    (
        PointSymmetry("Pi_1", xi=_one),
        PointSymmetry(
            "Pi_2",
            xi=lambda y, u, p: fn.cos(y),
            eta=lambda y, u, p: u * fn.sin(y),
        ),
        PointSymmetry(
            "Pi_3",
            xi=lambda y, u, p: fn.sin(y),
            eta=lambda y, u, p: -u * fn.cos(y),
        ),
        PointSymmetry("Pi_4", eta=lambda y, u, p: u),
        PointSymmetry("Pi_5", eta=lambda y, u, p: u**2),
        PointSymmetry("Pi_6", eta=lambda y, u, p: u**2 * fn.cos(y)),
        PointSymmetry("Pi_7", eta=lambda y, u, p: u**2 * fn.sin(y)),
    ),
    box=((-1.0, 1.0), (0.5, 2.0), (-1.0, 1.0), (-1.0, 1.0)),
    abelian_pairs=(("Pi_6", "Pi_7"),),
    canonical_chain="canonical",
    canonical_pair=("Pi_6", "Pi_7"),
)


# Darboux III, case C


def _chord_guard(y: float, u: float, params: OdeParams) -> float:
    return abs(u - y)


def _x_two_scale(y: Num, u: Num) -> Num:
    return (u + y) / (u - y)


def _gamma_1(y: Num, u: Num, p: OdeParams) -> tuple[Num, Num]:
    c2 = p["C2"]
    return -3.0 * (c2**2 + u * y**3) / (u - y), 3.0 * (c2**2 + u**3 * y) / (u - y)


def _gamma_2(y: Num, u: Num, p: OdeParams) -> tuple[Num, Num]:
    scale = _x_two_scale(y, u)
    return -scale * (p["C2"] + y**2), scale * (u**2 + p["C2"])


def _gamma_3(y: Num, u: Num, p: OdeParams) -> tuple[Num, Num]:
    c2 = p["C2"]
    return (u * y - 2.0 * c2 - y**2) / (u - y), (2.0 * c2 + u**2 - u * y) / (u - y)


def _gamma_4(y: Num, u: Num, p: OdeParams) -> tuple[Num, Num]:
    c2, scale = p["C2"], -1.0 / (3.0 * (u - y))
    return scale * (c2 - 2.0 * u * y - y**2), scale * (u**2 - c2 + 2.0 * u * y)


def _x_1(y: Num, u: Num, p: OdeParams) -> tuple[Num, Num]:
    c2 = p["C2"]
    scale = 3.0 * (c2 - u * y) / (u - y)
    return scale * (c2 + y**2), -scale * (c2 + u**2)


def _x_3(y: Num, u: Num, p: OdeParams) -> tuple[Num, Num]:
    scale = (u * y - p["C2"]) / (u - y)
    return scale, -scale


def _x_4(y: Num, u: Num, p: OdeParams) -> tuple[Num, Num]:
    scale = _x_two_scale(y, u)
    return -scale * y, scale * u


def _field(label: str, components: Components) -> PointSymmetry:
    """Generator from a function returning both components"""
    return PointSymmetry(
        label,
        xi=lambda y, u, p: components(y, u, p)[0],
        eta=lambda y, u, p: components(y, u, p)[1],
        guard=_chord_guard,
    )


DARBOUX_IIIC = SymmetryFamily(
    "darboux_iiic_2a2",
    SystemId.DIII_C,
    "fourth_order",
    (
        _field("Gamma_1", _gamma_1),
        _field("Gamma_2", _gamma_2),
        _field("Gamma_3", _gamma_3),
        _field("Gamma_4", _gamma_4),
        _field("X_1", _x_1),
        _field("X_2", _gamma_2),
        _field("X_3", _x_3),
        _field("X_4", _x_4),
    ),
    box=((0.3, 1.0), (-1.5, -1.05), (-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0)),
    abelian_pairs=(("X_1", "X_2"),),
    closure_sets=(("X_1", "X_2", "X_3", "X_4"),),
    canonical_chain="staged",
    canonical_pair=("X_1", "X_2"),
    identities=(
        GeneratorIdentity(
            "X_1", lambda p: {"Gamma_1": 1.0, "Gamma_3": -3.0 * p["C2"]}
        ),
        GeneratorIdentity("X_2", lambda p: {"Gamma_2": 1.0}),
        GeneratorIdentity("X_3", lambda p: {"Gamma_3": 1.0 / 3.0, "Gamma_4": 1.0}),
        GeneratorIdentity("X_4", lambda p: {"Gamma_3": 1.0 / 3.0, "Gamma_4": -2.0}),
    ),
)


# Darboux IV


def _double_angle_guard(y: float, u: float, params: OdeParams) -> float:
    return abs(fn.sin(2.0 * u))


DARBOUX_IVB = SymmetryFamily(
    "darboux_ivb_pair",
    SystemId.DIV_B,
    "third_order",
    (
        PointSymmetry(
            "cot_2u",
            eta=lambda y, u, p: -fn.cos(2.0 * u) / (2.0 * fn.sin(2.0 * u)),
            guard=_double_angle_guard,
        ),
        PointSymmetry(
            "csc_2u",
            eta=lambda y, u, p: 1.0 / fn.sin(2.0 * u),
            guard=_double_angle_guard,
        ),
    ),
    box=((1.4, 3.0), (0.2, 0.7), (-1.0, 1.0), (-1.0, 1.0)),
    abelian_pairs=(("cot_2u", "csc_2u"),),
    closure_sets=(("cot_2u", "csc_2u"),),
    canonical_chain="third_order",
    canonical_pair=("cot_2u", "csc_2u"),
)


def _ivc_weight(y: Num, params: OdeParams) -> Num:
    c2, c3 = params["C2"], params["C3"]
    return (c3 + 2.0 * c2 * y**2 + c3 * y**4) / y**2


DARBOUX_IVC = SymmetryFamily(
    "darboux_ivc_pair",
    SystemId.DIV_C,
    "third_order",
    (
        PointSymmetry(
            "inverse_u",
            eta=lambda y, u, p: 1.0 / u,
            guard=lambda y, u, p: abs(u),
        ),
        PointSymmetry(
            "weighted_inverse_u",
            eta=lambda y, u, p: _ivc_weight(y, p) / u,
            guard=lambda y, u, p: min(abs(u), abs(y)),
        ),
    ),
    box=((1.4, 3.0), (0.3, 0.9), (-1.0, 1.0), (-1.0, 1.0)),
    abelian_pairs=(("inverse_u", "weighted_inverse_u"),),
    canonical_chain="third_order",
    canonical_pair=("inverse_u", "weighted_inverse_u"),
)


FAMILIES: tuple[SymmetryFamily, ...] = (
    PERLICK_I,
    TAUB_NUT_SECOND,
    TAUB_NUT_THIRD,
    DARBOUX_IIIC,
    DARBOUX_IVB,
    DARBOUX_IVC,
)


@cache
def generators(system_id: str | SystemId) -> tuple[SymmetryFamily, ...]:
    """Generator families claimed for the reduced forms of a case"""
    system_id = parse_system_id(system_id)
    return tuple(family for family in FAMILIES if family.system_id == system_id)
