import numpy as np
import pytest

from app.exceptions import DomainGuardError, UnknownCaseError
from app.reduce.catalog import case_inputs, get_case
from app.symmetry.checks import (
    abelian_residual,
    canonical_deviation,
    closure_residual,
    family_equation,
    identity_residual,
    sample_jet_points,
    symmetry_residuals,
)
from app.symmetry.generators import (
    DARBOUX_IIIC,
    DARBOUX_IVB,
    DARBOUX_IVC,
    PERLICK_I,
    TAUB_NUT_SECOND,
    TAUB_NUT_THIRD,
    generators,
)
from app.symmetry.models import JetPoint, PointSymmetry, SymmetryFamily
from app.symmetry.prolongation import symmetry_residual
from app.systems.enums import SystemId


def _bound(system_id: SystemId) -> dict[str, float]:
    params, state = case_inputs(system_id)
    return get_case(system_id).bound_constants(params, state)


def _base_points(family: SymmetryFamily, count: int = 20) -> list[JetPoint]:
    """(y, u) points of the box, for the checks that ignore the equation"""
    rng = np.random.default_rng(42)
    (y_low, y_high), (u_low, u_high) = family.box[:2]
    ys = rng.uniform(y_low, y_high, count)
    us = rng.uniform(u_low, u_high, count)
    return [JetPoint(float(y), (float(u),)) for y, u in zip(ys, us, strict=True)]


@pytest.fixture(scope="module")
def perlick_i_params() -> dict[str, float]:
    return _bound(SystemId.PERLICK_I)


@pytest.fixture(scope="module")
def taub_nut_params() -> dict[str, float]:
    return _bound(SystemId.TAUB_NUT)


def test_families_by_system():
    assert generators(SystemId.TAUB_NUT) == (TAUB_NUT_SECOND, TAUB_NUT_THIRD)
    assert generators("perlick_i") == (PERLICK_I,)
    assert generators(SystemId.DI_1) == ()


def test_unknown_generator_label():
    with pytest.raises(UnknownCaseError):
        PERLICK_I.generator("Gamma_9")


def test_sampled_points_are_admissible(perlick_i_params):
    ode = family_equation(PERLICK_I)

    points = sample_jet_points(
        PERLICK_I, ode, perlick_i_params, 15, np.random.default_rng(42)
    )

    assert len(points) == 15
    for point in points:
        assert len(point.derivatives) == 2
        assert -1.0 <= point.y <= 1.0
        assert 0.5 <= point.u <= 2.0


def test_sampling_an_inadmissible_box(perlick_i_params):
    family = SymmetryFamily(
        "outside",
        SystemId.PERLICK_I,
        "second_order",
        PERLICK_I.generators,
        box=((-1.0, 1.0), (-1e-12, 1e-12), (-1.0, 1.0)),
    )

    with pytest.raises(DomainGuardError):
        sample_jet_points(
            family,
            family_equation(family),
            perlick_i_params,
            5,
            np.random.default_rng(42),
        )


def test_perlick_i_generators(perlick_i_params):
    ode = family_equation(PERLICK_I)
    points = sample_jet_points(
        PERLICK_I, ode, perlick_i_params, 20, np.random.default_rng(42)
    )

    residuals = symmetry_residuals(PERLICK_I, ode, perlick_i_params, points)

    assert set(residuals) == {"Gamma_7", "Gamma_8"}
    assert max(residuals.values()) <= 1e-9
    assert abelian_residual(PERLICK_I, perlick_i_params, points) <= 1e-10
    assert canonical_deviation(PERLICK_I, perlick_i_params, points) <= 1e-10


def test_shift_is_not_a_perlick_i_symmetry(perlick_i_params):
    ode = family_equation(PERLICK_I)
    points = sample_jet_points(
        PERLICK_I, ode, perlick_i_params, 20, np.random.default_rng(42)
    )
    shift = PointSymmetry("shift", eta=lambda y, u, p: 1.0)

    worst = max(
        symmetry_residual(ode, shift, point, perlick_i_params) for point in points
    )

    assert worst >= 1e-3


def test_taub_nut_rotation_generators(taub_nut_params):
    ode = family_equation(TAUB_NUT_SECOND)
    points = sample_jet_points(
        TAUB_NUT_SECOND, ode, taub_nut_params, 20, np.random.default_rng(42)
    )

    translation = TAUB_NUT_SECOND.generator("Theta_1")

    worst = max(
        symmetry_residual(ode, translation, point, taub_nut_params) for point in points
    )

    assert worst == pytest.approx(0.0, abs=1e-12)
    assert closure_residual(TAUB_NUT_SECOND, taub_nut_params, points) <= 1e-8


def test_taub_nut_third_order_generators(taub_nut_params):
    ode = family_equation(TAUB_NUT_THIRD)
    points = sample_jet_points(
        TAUB_NUT_THIRD, ode, taub_nut_params, 20, np.random.default_rng(42)
    )

    residuals = symmetry_residuals(TAUB_NUT_THIRD, ode, taub_nut_params, points)

    for label in ("Pi_1", "Pi_4", "Pi_5", "Pi_6", "Pi_7"):
        assert residuals[label] <= 1e-9
    assert abelian_residual(TAUB_NUT_THIRD, taub_nut_params, points) <= 1e-10
    assert canonical_deviation(TAUB_NUT_THIRD, taub_nut_params, points) <= 1e-10


def test_darboux_iiic_generators_as_combinations():
    params = {"C2": 0.3}
    points = _base_points(DARBOUX_IIIC)

    assert identity_residual(DARBOUX_IIIC, params, points) <= 1e-10
    assert abelian_residual(DARBOUX_IIIC, params, points) <= 1e-10
    assert closure_residual(DARBOUX_IIIC, params, points) <= 1e-8


def test_darboux_iiic_pair_in_canonical_coordinates():
    # The staged map with C2, rather than 3 C2, in its second component
    params = {"C2": 0.3}
    family = SymmetryFamily(
        DARBOUX_IIIC.name,
        DARBOUX_IIIC.system_id,
        DARBOUX_IIIC.form,
        DARBOUX_IIIC.generators,
        DARBOUX_IIIC.box,
        canonical_chain="staged_derived",
        canonical_pair=("X_1", "X_2"),
    )

    deviation = canonical_deviation(family, params, _base_points(family))

    assert deviation <= 1e-8


def test_darboux_ivb_pair_closes_without_commuting():
    points = _base_points(DARBOUX_IVB)

    assert abelian_residual(DARBOUX_IVB, {}, points) >= 1e-3
    assert closure_residual(DARBOUX_IVB, {}, points) <= 1e-10
    assert canonical_deviation(DARBOUX_IVB, _bound(SystemId.DIV_B), points) >= 1e-3


def test_darboux_ivc_pair():
    params = {"C2": 0.4, "C3": 0.7}
    points = _base_points(DARBOUX_IVC)

    assert abelian_residual(DARBOUX_IVC, params, points) <= 1e-10
    assert canonical_deviation(DARBOUX_IVC, params, points) <= 1e-10


def test_no_canonical_claim():
    assert canonical_deviation(TAUB_NUT_SECOND, {}, []) is None
