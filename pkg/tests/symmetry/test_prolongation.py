import numpy as np
import pytest

from app.exceptions import IllConditionedError, SingularLocusError
from app.integrate.ode import OdeSpec
from app.jets import functions as fn
from app.linearize.models import Transform
from app.symmetry.models import JetPoint, PointSymmetry
from app.symmetry.prolongation import (
    closure_check,
    commutator,
    prolong_coeffs,
    pushforward_generator,
    structure_constants,
    symmetry_residual,
)

_TRANSLATION = PointSymmetry("translation", xi=lambda y, u, p: 1.0)
_SCALING = PointSymmetry("scaling", eta=lambda y, u, p: u)
_DILATION = PointSymmetry("dilation", xi=lambda y, u, p: y)


def test_translation_does_not_prolong():
    prolonged = prolong_coeffs(_TRANSLATION, 0.3, [1.0, 2.0, 3.0, 4.0], {})

    np.testing.assert_array_equal(prolonged, [0.0, 0.0, 0.0])


def test_scaling_prolongs_to_the_derivatives():
    prolonged = prolong_coeffs(_SCALING, 0.3, [1.0, 2.0, 3.0], {})

    np.testing.assert_allclose(prolonged, [2.0, 3.0], atol=1e-14)


def test_dilation_prolongation():
    # y ∂_y gives η^(k) = -k u^(k)
    prolonged = prolong_coeffs(_DILATION, 0.7, [1.0, 2.0, 3.0, 4.0, 5.0], {})

    np.testing.assert_allclose(prolonged, [-2.0, -6.0, -12.0, -20.0], atol=1e-12)


def test_prolongation_of_a_curved_generator():
    # ξ = u, η = 0: η' = -u'², η'' = -3 u' u''
    generator = PointSymmetry("shear", xi=lambda y, u, p: u)

    prolonged = prolong_coeffs(generator, 0.1, [0.5, 2.0, 3.0], {})

    np.testing.assert_allclose(prolonged, [-4.0, -18.0], atol=1e-12)


def test_harmonic_oscillator_symmetries():
    oscillator = OdeSpec("harmonic", 2, lambda y, d, p: -d[0])
    point = JetPoint(0.4, (0.8, -0.3))

    assert symmetry_residual(oscillator, _TRANSLATION, point, {}) == pytest.approx(
        0.0, abs=1e-14
    )
    assert symmetry_residual(oscillator, _SCALING, point, {}) == pytest.approx(
        0.0, abs=1e-14
    )


def test_translation_in_u_is_not_a_symmetry_of_a_forced_equation():
    equation = OdeSpec("forced", 2, lambda y, d, p: d[0] ** 2)
    shift = PointSymmetry("shift", eta=lambda y, u, p: 1.0)

    residual = symmetry_residual(equation, shift, JetPoint(0.0, (1.0, 0.0)), {})

    assert residual == pytest.approx(1.0)


def test_commutators():
    assert commutator(_TRANSLATION, _TRANSLATION, 0.2, 0.5, {}) == (0.0, 0.0)
    assert commutator(_TRANSLATION, _DILATION, 0.2, 0.5, {}) == pytest.approx(
        (1.0, 0.0)
    )


def test_closure_of_translation_and_dilation():
    points = [(0.1 * k, 1.0 + 0.05 * k) for k in range(1, 11)]

    fits = structure_constants([_TRANSLATION, _DILATION], points, {})

    coefficients, residual = fits["translation", "dilation"]
    np.testing.assert_allclose(coefficients, [1.0, 0.0], atol=1e-12)
    assert residual <= 1e-10
    assert closure_check([_TRANSLATION, _DILATION], points, {}) <= 1e-10


def test_closure_fails_outside_the_span():
    quadratic = PointSymmetry("quadratic", xi=lambda y, u, p: y**2)
    points = [(0.1 * k, 1.0) for k in range(1, 11)]

    assert closure_check([_TRANSLATION, quadratic], points, {}) >= 1e-3


def test_closure_on_a_degenerate_point_set():
    points = [(0.5, 1.0)] * 5

    with pytest.raises(IllConditionedError):
        closure_check([_TRANSLATION, _DILATION], points, {})


def test_singular_generator():
    generator = PointSymmetry(
        "inverse", eta=lambda y, u, p: 1.0 / u, guard=lambda y, u, p: abs(u)
    )

    with pytest.raises(SingularLocusError):
        prolong_coeffs(generator, 0.0, [0.0, 1.0], {})


def test_pushforward_into_canonical_coordinates():
    # u ∂_u becomes ∂_U once U = log u
    logarithm = Transform("log", lambda x, v, p: (x, fn.log(v)))

    _, _, xi, eta = pushforward_generator(logarithm, _SCALING, 0.3, 2.0, {})

    assert xi == pytest.approx(0.0)
    assert eta == pytest.approx(1.0)
