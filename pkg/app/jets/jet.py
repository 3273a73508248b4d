"""Truncated multivariate Taylor arithmetic.

A Jet stores the Taylor coefficients c_α = ∂^α f / α! of a scalar function for
every multi-index α of total degree ≤ order, in a dense numpy vector. Monomials
are ordered by degree, so the coefficients of a lower order jet are a prefix of
the coefficients of a higher order one.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import cache
from itertools import combinations_with_replacement
from typing import TYPE_CHECKING

import numpy as np

from app.config import settings
from app.exceptions import JetDomainError, JetOrderError

if TYPE_CHECKING:
    from collections.abc import Sequence


class JetSpace:
    """Monomial layout and product table shared by all jets over the same
    variables and order. Instances are cached, use `jet_space` to get one.
    """

    __slots__ = (
        "_left",
        "_right",
        "_target",
        "degrees",
        "factorials",
        "index",
        "monomials",
        "order",
        "size",
        "variables",
    )

    def __init__(self, variables: tuple[str, ...], order: int):
        self.variables = variables
        self.order = order

        monomials: list[tuple[int, ...]] = []
        for degree in range(order + 1):
            for combination in combinations_with_replacement(
                range(len(variables)), degree
            ):
                counts = Counter(combination)
                monomials.append(tuple(counts[i] for i in range(len(variables))))

        self.monomials = tuple(monomials)
        self.size = len(monomials)
        self.index = {monomial: i for i, monomial in enumerate(monomials)}
        self.degrees = np.array([sum(m) for m in monomials], dtype=int)
        self.factorials = np.array(
            [math.prod(math.factorial(k) for k in m) for m in monomials], dtype=float
        )

        left, right, target = [], [], []
        for i, first in enumerate(monomials):
            for j, second in enumerate(monomials):
                if self.degrees[i] + self.degrees[j] > order:
                    continue
                left.append(i)
                right.append(j)
                target.append(
                    self.index[tuple(a + b for a, b in zip(first, second, strict=True))]
                )
        self._left = np.array(left, dtype=int)
        self._right = np.array(right, dtype=int)
        self._target = np.array(target, dtype=int)

    def __repr__(self) -> str:
        return f"JetSpace(variables={self.variables}, order={self.order})"

    def multiply(self, first: np.ndarray, second: np.ndarray) -> np.ndarray:
        return np.bincount(
            self._target,
            weights=first[self._left] * second[self._right],
            minlength=self.size,
        )

    def count_up_to(self, order: int) -> int:
        return int(np.count_nonzero(self.degrees <= order))


@cache
def jet_space(variables: tuple[str, ...], order: int) -> JetSpace:
    if order < 0:
        msg = f"Negative jet order {order}"
        raise JetOrderError(msg)
    return JetSpace(variables, order)


@cache
def _embedding(source: JetSpace, target: JetSpace) -> np.ndarray:
    positions = [target.variables.index(name) for name in source.variables]
    indices = []
    for monomial in source.monomials:
        expanded = [0] * len(target.variables)
        for position, exponent in zip(positions, monomial, strict=True):
            expanded[position] = exponent
        indices.append(target.index[tuple(expanded)])
    return np.array(indices, dtype=int)


@cache
def _derivative_map(space: JetSpace, name: str) -> tuple[np.ndarray, np.ndarray]:
    lower = jet_space(space.variables, space.order - 1)
    position = space.variables.index(name)
    sources, multipliers = [], []
    for monomial in lower.monomials:
        raised = list(monomial)
        raised[position] += 1
        sources.append(space.index[tuple(raised)])
        multipliers.append(raised[position])
    return np.array(sources, dtype=int), np.array(multipliers, dtype=float)


def _merged_space(first: JetSpace, second: JetSpace) -> JetSpace:
    if first.order != second.order:
        msg = f"Cannot combine jets of order {first.order} and {second.order}"
        raise JetOrderError(msg)
    variables = first.variables + tuple(
        name for name in second.variables if name not in first.variables
    )
    return jet_space(variables, first.order)


class Jet:
    """Truncated Taylor expansion of a scalar function around a point"""

    __slots__ = ("coefficients", "space")

    # Let numpy scalars defer to the reflected Jet operators
    __array_ufunc__ = None

    def __init__(self, space: JetSpace, coefficients: np.ndarray):
        self.space = space
        self.coefficients = coefficients

    def __repr__(self) -> str:
        return (
            f"Jet(value={self.value!r}, variables={self.space.variables}, "
            f"order={self.space.order})"
        )

    @property
    def value(self) -> float:
        return float(self.coefficients[0])

    @property
    def order(self) -> int:
        return self.space.order

    @property
    def variables(self) -> tuple[str, ...]:
        return self.space.variables

    def partial(self, *names: str) -> float:
        """Derivative with respect to the given variables, repeated names
        meaning higher derivatives : partial("x", "x", "y") is ∂³f/∂x²∂y.
        """
        counts = Counter(names)
        if any(name not in self.space.variables for name in counts):
            return 0.0
        monomial = tuple(counts[name] for name in self.space.variables)
        if sum(monomial) > self.space.order:
            msg = f"Derivative of degree {sum(monomial)} exceeds jet order {self.order}"
            raise JetOrderError(msg)
        position = self.space.index[monomial]
        return float(self.coefficients[position] * self.space.factorials[position])

    def gradient(self) -> np.ndarray:
        return np.array([self.partial(name) for name in self.space.variables])

    def taylor_coefficients(self) -> np.ndarray:
        """Coefficients of a univariate jet, c_k = f^(k)/k!"""
        if len(self.space.variables) != 1:
            msg = "Taylor coefficients are only defined for univariate jets"
            raise JetOrderError(msg)
        return self.coefficients.copy()

    def derivatives(self) -> np.ndarray:
        """Derivatives f, f', ..., f^(order) of a univariate jet"""
        return self.taylor_coefficients() * self.space.factorials

    def differentiate(self, name: str) -> Jet:
        """Partial derivative as a jet of order one less"""
        if self.space.order == 0:
            msg = "Cannot differentiate a jet of order 0"
            raise JetOrderError(msg)
        lower = jet_space(self.space.variables, self.space.order - 1)
        if name not in self.space.variables:
            return Jet(lower, np.zeros(lower.size))
        sources, multipliers = _derivative_map(self.space, name)
        return Jet(lower, self.coefficients[sources] * multipliers)

    def truncate(self, order: int) -> Jet:
        if order > self.space.order:
            msg = f"Cannot truncate a jet of order {self.order} to order {order}"
            raise JetOrderError(msg)
        lower = jet_space(self.space.variables, order)
        return Jet(lower, self.coefficients[: lower.size].copy())

    def embed(self, space: JetSpace) -> Jet:
        if space is self.space:
            return self
        return Jet(
            space,
            np.bincount(
                _embedding(self.space, space),
                weights=self.coefficients,
                minlength=space.size,
            ),
        )

    def coefficient(self, name: str, power: int) -> Jet:
        """Coefficient of name^power, as a jet over the remaining variables of
        order (order - power).
        """
        if not 0 <= power <= self.space.order:
            msg = f"Power {power} of {name} outside of a jet of order {self.order}"
            raise JetOrderError(msg)
        position = self.space.variables.index(name)
        others = tuple(v for v in self.space.variables if v != name)
        lower = jet_space(others, self.space.order - power)
        coefficients = np.empty(lower.size)
        for i, monomial in enumerate(lower.monomials):
            full = list(monomial)
            full.insert(position, power)
            coefficients[i] = self.coefficients[self.space.index[tuple(full)]]
        return Jet(lower, coefficients)

    def compose(self, taylor: Sequence[float]) -> Jet:
        """Jet of g∘f, given the Taylor coefficients g^(k)(f0)/k! of g at the
        value of this jet.
        """
        nilpotent = self.coefficients.copy()
        nilpotent[0] = 0.0
        order = self.space.order
        result = np.zeros(self.space.size)
        result[0] = taylor[order]
        for k in range(order - 1, -1, -1):
            result = self.space.multiply(result, nilpotent)
            result[0] += taylor[k]
        return Jet(self.space, result)

    def _aligned(self, other: Jet) -> tuple[Jet, Jet]:
        if other.space is self.space:
            return self, other
        space = _merged_space(self.space, other.space)
        return self.embed(space), other.embed(space)

    def _constant_like(self, value: float) -> Jet:
        coefficients = np.zeros(self.space.size)
        coefficients[0] = value
        return Jet(self.space, coefficients)

    def __neg__(self) -> Jet:
        return Jet(self.space, -self.coefficients)

    def __pos__(self) -> Jet:
        return self

    def __add__(self, other: Jet | float) -> Jet:
        if isinstance(other, Jet):
            first, second = self._aligned(other)
            return Jet(first.space, first.coefficients + second.coefficients)
        coefficients = self.coefficients.copy()
        coefficients[0] += other
        return Jet(self.space, coefficients)

    def __radd__(self, other: float) -> Jet:
        return self.__add__(other)

    def __sub__(self, other: Jet | float) -> Jet:
        return self.__add__(-other)

    def __rsub__(self, other: float) -> Jet:
        return (-self).__add__(other)

    def __mul__(self, other: Jet | float) -> Jet:
        if isinstance(other, Jet):
            first, second = self._aligned(other)
            return Jet(
                first.space,
                first.space.multiply(first.coefficients, second.coefficients),
            )
        return Jet(self.space, self.coefficients * other)

    def __rmul__(self, other: float) -> Jet:
        return self.__mul__(other)

    def reciprocal(self) -> Jet:
        x = self.value
        if x == 0.0:
            raise JetDomainError("div", x)
        return self.compose([(-1.0) ** k / x ** (k + 1) for k in range(self.order + 1)])

    def __truediv__(self, other: Jet | float) -> Jet:
        if isinstance(other, Jet):
            return self.__mul__(other.reciprocal())
        if other == 0:
            raise JetDomainError("div", float(other))
        return Jet(self.space, self.coefficients / other)

    def __rtruediv__(self, other: float) -> Jet:
        return self.reciprocal() * other

    def __pow__(self, exponent: Jet | float) -> Jet:
        if isinstance(exponent, Jet):
            from .functions import exp, log  # noqa: PLC0415

            return exp(exponent * log(self))
        if float(exponent).is_integer() and exponent >= 0:
            return self._integer_power(int(exponent))
        if float(exponent).is_integer():
            return self._integer_power(-int(exponent)).reciprocal()
        x = self.value
        if x <= 0.0:
            raise JetDomainError("pow", x)
        return self.compose(power_taylor(x, exponent, self.order))

    def __rpow__(self, base: float) -> Jet:
        from .functions import exp  # noqa: PLC0415

        if base <= 0:
            raise JetDomainError("pow", float(base))
        return exp(self * math.log(base))

    def _integer_power(self, exponent: int) -> Jet:
        result = self._constant_like(1.0)
        factor = self
        while exponent:
            if exponent & 1:
                result = result * factor
            exponent >>= 1
            if exponent:
                factor = factor * factor
        return result


def power_taylor(x: float, exponent: float, order: int) -> list[float]:
    """Generalized binomial coefficients of (x + h)^p in powers of h"""
    coefficients = []
    binomial = 1.0
    for k in range(order + 1):
        coefficients.append(binomial * x ** (exponent - k))
        binomial *= (exponent - k) / (k + 1)
    return coefficients


def seed(name: str, value: float, order: int) -> Jet:
    """Jet of the identity function of one variable"""
    if not 1 <= order <= settings.max_jet_order:
        msg = f"Jet order {order} outside of 1..{settings.max_jet_order}"
        raise JetOrderError(msg)
    space = jet_space((name,), order)
    coefficients = np.zeros(space.size)
    coefficients[0] = value
    coefficients[1] = 1.0
    return Jet(space, coefficients)


def seed_all(names: Sequence[str], values: Sequence[float], order: int) -> list[Jet]:
    """Seed several variables at once in a common jet space"""
    space = jet_space(tuple(names), order)
    jets = []
    for position, value in enumerate(values):
        coefficients = np.zeros(space.size)
        coefficients[0] = value
        if order > 0:
            unit = [0] * len(names)
            unit[position] = 1
            coefficients[space.index[tuple(unit)]] = 1.0
        jets.append(Jet(space, coefficients))
    return jets


def constant(value: float, like: Jet) -> Jet:
    return like._constant_like(value)  # noqa: SLF001


def taylor_curve(derivatives: Sequence[float], order: int, name: str = "t") -> Jet:
    """Univariate jet of u(y0 + t) from the derivatives u, u', ..., known at y0.
    Derivatives beyond the given ones are set to zero.
    """
    space = jet_space((name,), order)
    coefficients = np.zeros(space.size)
    for k, derivative in enumerate(derivatives[: order + 1]):
        coefficients[k] = derivative / math.factorial(k)
    return Jet(space, coefficients)


def as_jet(value: Jet | float, like: Jet) -> Jet:
    if isinstance(value, Jet):
        return value
    return constant(float(value), like)


def value_of(value: Jet | float) -> float:
    return value.value if isinstance(value, Jet) else float(value)



type Num = Jet | float
