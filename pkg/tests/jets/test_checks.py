import math

import pytest

from app.exceptions import ConfigError, SingularLocusError
from app.jets import functions as fn
from app.jets.checks import fd_check, jet_gradient


def test_fd_check_on_sine():
    assert fd_check(lambda v: fn.sin(v[0]), [0.7], 1e-6) <= 1e-8


def test_fd_check_on_two_variables():
    def function(v):
        return fn.exp(v[0]) * fn.cos(v[1]) + v[0] * v[1] ** 2

    assert fd_check(function, [0.3, -1.2]) <= 1e-6


def test_jet_gradient():
    gradient = jet_gradient(lambda v: v[0] * v[1] + fn.log(v[0]), [2.0, 3.0])

    assert gradient == pytest.approx([3.5, 2.0])


def test_stencil_leaving_the_domain():
    with pytest.raises(SingularLocusError):
        fd_check(lambda v: fn.sqrt(v[0]), [1e-8], 1e-6)


def test_constant_function_has_zero_gradient():
    assert fd_check(lambda v: math.pi, [1.0, 2.0]) == 0.0


@pytest.mark.parametrize("step", [0.0, -1e-6, math.nan])
def test_fd_check_rejects_non_positive_steps(step: float):
    with pytest.raises(ConfigError):
        fd_check(lambda v: fn.sin(v[0]), [0.7], step)
