import numpy as np
import pytest

from app.exceptions import JetOrderError, SingularLocusError
from app.linearize.catalog import transform_chain
from app.linearize.models import Transform
from app.linearize.transforms import (
    identity,
    jacobian_determinant,
    push_chain,
    pushforward,
    substitution,
)
from app.systems.enums import SystemId


def test_identity_keeps_the_derivatives():
    y, derivatives = pushforward([identity()], {}, 0.7, [1.5, -0.3, 2.0])

    assert y == pytest.approx(0.7)
    np.testing.assert_allclose(derivatives, [1.5, -0.3, 2.0], atol=1e-14)


def test_scaling_of_the_dependent_variable():
    double = Transform("double", lambda x, v, p: (x, 2.0 * v))

    _, derivatives = pushforward([double], {}, 0.0, [1.0, 2.0, 3.0])

    np.testing.assert_allclose(derivatives, [2.0, 4.0, 6.0], atol=1e-14)


def test_reciprocal_independent_variable():
    # u = y, so U = 1/X once X = 1/y
    reciprocal = Transform("reciprocal", lambda x, v, p: (1.0 / x, v))

    new_y, derivatives = pushforward([reciprocal], {}, 2.0, [2.0, 1.0, 0.0])

    assert new_y == pytest.approx(0.5)
    np.testing.assert_allclose(derivatives, [2.0, -4.0, 16.0], rtol=1e-12)


def test_substitution_lowers_the_order():
    # u = y³ at y = 1, the new dependent variable is u'' = 6y
    y, derivatives = pushforward([substitution(2)], {}, 1.0, [1.0, 3.0, 6.0, 6.0, 0.0])

    assert y == pytest.approx(1.0)
    np.testing.assert_allclose(derivatives, [6.0, 6.0, 0.0], atol=1e-12)


def test_substitution_is_not_a_point_transformation():
    assert not substitution(1).is_point
    assert identity().is_point


def test_jacobian_of_a_collapsing_map():
    collapse = Transform("collapse", lambda x, v, p: (x, 0.0 * v + x))

    assert jacobian_determinant(collapse, {}, 1.0, 2.0) == pytest.approx(0.0)
    with pytest.raises(SingularLocusError):
        pushforward([collapse], {}, 1.0, [2.0, 1.0, 0.0])


def test_push_chain_needs_enough_derivatives():
    chain = transform_chain(SystemId.PERLICK_I, "free_particle")

    with pytest.raises(JetOrderError):
        push_chain(chain, {"k": 0.5, "A": -0.5, "w": 1.0}, 0.1, [1.0, 0.1])


def test_tan_transform_of_a_harmonic_solution():
    # u'' = -u once offset, so the tan chart turns it into a straight line
    chain = transform_chain(SystemId.PERLICK_I, "free_particle")
    params = {"k": 0.0, "A": 0.0, "w": 1.0}
    a, b = 0.4, -0.2
    images = []
    for y in (0.1, 0.3, 0.5):
        u = a * np.cos(y) + b * np.sin(y)
        du = -a * np.sin(y) + b * np.cos(y)
        # v with -1/v = u for k = A = 0
        v, dv = -1.0 / u, du / u**2
        d2v = -1.0 / u - 2.0 * du**2 / u**3
        images.append(push_chain(chain, params, y, [v, dv, d2v]))

    for new_y, derivatives in images:
        assert derivatives[0] == pytest.approx(a + b * new_y, abs=1e-12)
        assert derivatives[1] == pytest.approx(b, abs=1e-12)
        assert derivatives[2] == pytest.approx(0.0, abs=1e-10)
