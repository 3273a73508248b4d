"""Elementary functions accepting plain floats as well as jets.

Each function is defined once by its Taylor coefficients at a point, the jet
version is obtained by composition.
"""

import math
from collections.abc import Callable

import numpy as np

from app.enums import ElementaryOp
from app.exceptions import JetDomainError

from .jet import Jet, Num, jet_space, power_taylor, value_of


def _apply(
    x: Num,
    function: Callable[[float], float],
    taylor: Callable[[float, int], list[float]],
) -> Num:
    if isinstance(x, Jet):
        return x.compose(taylor(x.value, x.order))
    return function(float(x))


def _exp_taylor(x: float, order: int) -> list[float]:
    value = math.exp(x)
    return [value / math.factorial(k) for k in range(order + 1)]


def _sin_taylor(x: float, order: int) -> list[float]:
    cycle = (math.sin(x), math.cos(x), -math.sin(x), -math.cos(x))
    return [cycle[k % 4] / math.factorial(k) for k in range(order + 1)]


def _cos_taylor(x: float, order: int) -> list[float]:
    cycle = (math.cos(x), -math.sin(x), -math.cos(x), math.sin(x))
    return [cycle[k % 4] / math.factorial(k) for k in range(order + 1)]


def _log_taylor(x: float, order: int) -> list[float]:
    return [math.log(x)] + [
        (-1.0) ** (k + 1) / (k * x**k) for k in range(1, order + 1)
    ]


def _polynomial_chain(x: float, order: int, first: list[float]) -> list[float]:
    """Taylor coefficients of a function whose derivative is the polynomial
    `first` of the function value itself (tan' = 1 + tan²).
    """
    derivative = first
    values = [x]
    for k in range(1, order + 1):
        values.append(
            sum(c * x**n for n, c in enumerate(derivative)) / math.factorial(k)
        )
        derivative = [n * c for n, c in enumerate(derivative)][1:] or [0.0]
        derivative = _poly_multiply(derivative, first)
    return values


def _poly_multiply(first: list[float], second: list[float]) -> list[float]:
    result = [0.0] * (len(first) + len(second) - 1)
    for i, a in enumerate(first):
        for j, b in enumerate(second):
            result[i + j] += a * b
    return result


def _arccos_taylor(x: float, order: int) -> list[float]:
    # arccos'(x + h) = -(1 - (x + h)²)^(-1/2), expanded as a jet in h
    space = jet_space(("h",), max(order - 1, 0))
    shift = np.zeros(space.size)
    shift[0] = x
    if order > 1:
        shift[1] = 1.0
    radicand = 1.0 - Jet(space, shift) * Jet(space, shift)
    derivative = radicand.compose(power_taylor(radicand.value, -0.5, space.order))
    return [math.acos(x)] + [
        -derivative.coefficients[k - 1] / k for k in range(1, order + 1)
    ]


def sqrt(x: Num) -> Num:
    value = value_of(x)
    if value < 0.0 or (isinstance(x, Jet) and value == 0.0):
        raise JetDomainError(ElementaryOp.SQRT, value)
    return _apply(x, math.sqrt, lambda v, n: power_taylor(v, 0.5, n))


def exp(x: Num) -> Num:
    return _apply(x, math.exp, _exp_taylor)


def log(x: Num) -> Num:
    value = value_of(x)
    if value <= 0.0:
        raise JetDomainError(ElementaryOp.LOG, value)
    return _apply(x, math.log, _log_taylor)


def sin(x: Num) -> Num:
    return _apply(x, math.sin, _sin_taylor)


def cos(x: Num) -> Num:
    return _apply(x, math.cos, _cos_taylor)


def tan(x: Num) -> Num:
    value = value_of(x)
    if math.cos(value) == 0.0:
        raise JetDomainError(ElementaryOp.TAN, value)
    return _apply(
        x,
        math.tan,
        lambda v, n: _polynomial_chain(math.tan(v), n, [1.0, 0.0, 1.0]),
    )


def arccos(x: Num) -> Num:
    value = value_of(x)
    # derivatives blow up at ±1, plain floats may still sit on the boundary
    if abs(value) > 1.0 or (isinstance(x, Jet) and abs(value) == 1.0):
        raise JetDomainError(ElementaryOp.ARCCOS, value)
    return _apply(x, math.acos, _arccos_taylor)


def sinh(x: Num) -> Num:
    return (exp(x) - exp(-x)) / 2.0


def cosh(x: Num) -> Num:
    return (exp(x) + exp(-x)) / 2.0


def power(x: Num, exponent: Num) -> Num:
    if isinstance(x, Jet) or isinstance(exponent, Jet):
        if not isinstance(x, Jet):
            return exponent.__rpow__(float(x))
        return x**exponent
    value = float(x)
    if value < 0.0 and not float(exponent).is_integer():
        raise JetDomainError(ElementaryOp.POW, value)
    if value == 0.0 and exponent < 0:
        raise JetDomainError(ElementaryOp.POW, value)
    return value**exponent


def divide(x: Num, y: Num) -> Num:
    if not isinstance(y, Jet) and float(y) == 0.0:
        raise JetDomainError(ElementaryOp.DIV, 0.0)
    return x / y


def square(x: Num) -> Num:
    return x * x


def reciprocal(x: Num) -> Num:
    return divide(1.0, x)


_OPERATIONS: dict[ElementaryOp, Callable[..., Num]] = {
    ElementaryOp.ADD: lambda x, y: x + y,
    ElementaryOp.SUB: lambda x, y: x - y,
    ElementaryOp.MUL: lambda x, y: x * y,
    ElementaryOp.DIV: divide,
    ElementaryOp.POW: power,
    ElementaryOp.SQRT: sqrt,
    ElementaryOp.SIN: sin,
    ElementaryOp.COS: cos,
    ElementaryOp.TAN: tan,
    ElementaryOp.EXP: exp,
    ElementaryOp.LOG: log,
    ElementaryOp.ARCCOS: arccos,
}


def apply(op: ElementaryOp | str, *args: Num) -> Num:
    """Apply an elementary operation by name"""
    return _OPERATIONS[ElementaryOp(op)](*args)
