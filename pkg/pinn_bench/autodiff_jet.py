# coding=utf-8
"""
Truncated Taylor jets over tape nodes.

A Jet carries the derivatives d^k u / dz^k, k = 0..order, of a quantity u with respect to a
single active input z. Coefficients are tape nodes, so every derivative built here can be
pushed through the reverse sweep to obtain parameter gradients (forward-over-reverse).
Coefficients are stored as plain derivatives, not divided by k!.
"""
from math import comb
from typing import Callable, Sequence

import numpy as np

import pinn_bench.autodiff_tape as ad
import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.autodiff_tape import Node, Tape
from pinn_bench.pinn_bench_consts import Consts


class Jet(object):
    __slots__ = ("coeffs",)
    __array_ufunc__ = None

    def __init__(self, coeffs: Sequence[Node]):
        if not 1 <= len(coeffs) <= Consts.max_jet_order + 1:
            raise pinn_exception.UnsupportedOrderError(f"Jet order {len(coeffs) - 1} is not supported")
        self.coeffs = tuple(coeffs)

    def __repr__(self):
        return f"Jet(order={self.order}, shape={self.value.shape})"

    def __getitem__(self, k: int) -> Node:
        return self.coeffs[k]

    @property
    def value(self) -> Node:
        return self.coeffs[0]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def tape(self) -> Tape:
        return self.coeffs[0].tape

    def derivatives(self) -> list[np.ndarray]:
        return [coeff.value for coeff in self.coeffs]

    def _check(self, other: "Jet") -> None:
        if other.order != self.order:
            raise pinn_exception.ShapeError(f"Jets of order {self.order} and {other.order} cannot be combined")

    def __add__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return Jet([a + b for a, b in zip(self.coeffs, other.coeffs)])
        return Jet((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return Jet([a - b for a, b in zip(self.coeffs, other.coeffs)])
        return Jet((self.coeffs[0] - other,) + self.coeffs[1:])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Jet([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            coeffs = []
            for n in range(self.order + 1):
                term = self.coeffs[0] * other.coeffs[n]
                for k in range(1, n + 1):
                    product = self.coeffs[k] * other.coeffs[n - k]
                    term = term + (product if comb(n, k) == 1 else comb(n, k) * product)
                coeffs.append(term)
            return Jet(coeffs)
        return Jet([a * other for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            self._check(other)
            return self * reciprocal(other)
        return Jet([a / other for a in self.coeffs])

    def __rtruediv__(self, other):
        return reciprocal(self) * other

    def __pow__(self, exponent: float):
        return power(self, exponent)


def lift_input(tape: Tape, x, active: bool, order: int, scale: float = 1.0) -> Jet:
    """
    Seeds a Jet for one network input.

    :param tape: tape the jet coefficients are recorded on,
    :param x: coordinate value(s), scalar or one entry per lane,
    :param active: True if x is the differentiation variable,
    :param order: highest derivative order carried (0..3),
    :param scale: first coefficient of the active input, dz'/dz for an affinely rescaled input.
    :return: Jet{x; scale, 0, ...} if active, Jet{x; 0, ...} otherwise.
    """
    if order < 0 or order > Consts.max_jet_order:
        raise pinn_exception.UnsupportedOrderError(f"Derivative order {order} is not supported")
    value = np.atleast_1d(np.asarray(x, dtype=np.float64))
    coeffs = [tape.constant(value)]
    if order >= 1:
        coeffs.append(tape.constant(np.full_like(value, scale if active else 0.0)))
    for _ in range(2, order + 1):
        coeffs.append(tape.constant(np.zeros_like(value)))
    return Jet(coeffs)


def compose(inner: Jet, derivatives: Sequence[Node]) -> Jet:
    """
    Jet of f(inner) given f^(k) evaluated at the inner value, k = 0..order
    (Faa di Bruno formula truncated at order 3).
    """
    g = inner.coeffs
    f = derivatives
    coeffs = [f[0]]
    if inner.order >= 1:
        coeffs.append(f[1] * g[1])
    if inner.order >= 2:
        g1_sq = g[1] * g[1]
        coeffs.append(f[2] * g1_sq + f[1] * g[2])
    if inner.order >= 3:
        coeffs.append(f[3] * (g1_sq * g[1]) + 3.0 * (f[2] * (g[1] * g[2])) + f[1] * g[3])
    return Jet(coeffs)


def exp(jet: Jet) -> Jet:
    e = ad.exp(jet.value)
    return compose(jet, [e] * (jet.order + 1))


def tanh(jet: Jet) -> Jet:
    t = ad.tanh(jet.value)
    derivatives = [t]
    if jet.order >= 1:
        d1 = 1.0 - t * t
        derivatives.append(d1)
    if jet.order >= 2:
        derivatives.append(-2.0 * (t * d1))
    if jet.order >= 3:
        derivatives.append(d1 * (6.0 * (t * t) - 2.0))
    return compose(jet, derivatives)


def sigmoid(jet: Jet) -> Jet:
    s = ad.sigmoid(jet.value)
    derivatives = [s]
    if jet.order >= 1:
        d1 = s * (1.0 - s)
        derivatives.append(d1)
    if jet.order >= 2:
        derivatives.append(d1 * (1.0 - 2.0 * s))
    if jet.order >= 3:
        derivatives.append(d1 * (1.0 - 6.0 * s + 6.0 * (s * s)))
    return compose(jet, derivatives)


def relu(jet: Jet) -> Jet:
    derivatives = [ad.relu(jet.value)]
    if jet.order >= 1:
        derivatives.append(ad.step(jet.value))
    for _ in range(2, jet.order + 1):
        derivatives.append(jet.tape.constant(np.zeros_like(jet.value.value)))
    return compose(jet, derivatives)


def power(jet: Jet, exponent: float) -> Jet:
    y = jet.value
    derivatives = []
    coefficient = 1.0
    for k in range(jet.order + 1):
        if coefficient == 0.0:
            derivatives.append(jet.tape.constant(np.zeros_like(y.value)))
        else:
            derivatives.append(coefficient * ad.power(y, exponent - k))
        coefficient *= exponent - k
    return compose(jet, derivatives)


def reciprocal(jet: Jet) -> Jet:
    if np.any(jet.value.value == 0.0):
        raise pinn_exception.SingularityError("Division by a Jet whose value is zero")
    return power(jet, -1.0)


_ELEMENTARY: dict[str, Callable[..., Jet]] = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "exp": exp,
    "tanh": tanh,
    "sigmoid": sigmoid,
    "relu": relu,
    "power": power,
}


def jet_apply(name: str, *args) -> Jet:
    """
    Applies an elementary function by name: add, sub, mul, div, exp, tanh, sigmoid, relu or
    power (second argument is the constant exponent).
    """
    try:
        function = _ELEMENTARY[name]
    except KeyError:
        raise pinn_exception.PinnBenchError(f"Unknown elementary function: {name}")
    return function(*args)
