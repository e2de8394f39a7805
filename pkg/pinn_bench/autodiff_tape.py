# coding=utf-8
"""
Reverse-mode automatic differentiation on an append-only tape.

Every node holds a numpy array. Elementwise operations treat each array entry as an
independent scalar lane, so one tape evaluates the same scalar graph for a whole batch of
collocation points at once. Nodes are appended in evaluation order, which makes the
append order a topological order and lets the reverse sweep walk the tape backwards.
"""
from typing import Callable, Optional, Sequence

import numpy as np
from loguru import logger
from scipy.special import expit

import pinn_bench.pinn_bench_exception as pinn_exception

Vjp = Callable[[np.ndarray], Sequence[Optional[np.ndarray]]]


def _unbroadcast(grad: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, size in enumerate(shape):
        if size == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


class Node(object):
    """
    One tape entry: operation kind, parent nodes and a vector-Jacobian product closure
    that maps the adjoint of this node to the adjoints of its parents.
    """
    __slots__ = ("tape", "index", "op", "value", "parents", "vjp", "requires_grad", "grad")
    # numpy operands defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, tape: "Tape", op: str, value: np.ndarray, parents: tuple["Node", ...],
                 vjp: Optional[Vjp], requires_grad: bool):
        self.tape = tape
        self.index = len(tape.nodes)
        self.op = op
        self.value = value
        self.parents = parents
        self.vjp = vjp
        self.requires_grad = requires_grad
        self.grad: Optional[np.ndarray] = None

    def __repr__(self):
        return f"Node(#{self.index} {self.op} shape={self.value.shape})"

    @property
    def shape(self) -> tuple[int, ...]:
        return self.value.shape

    def _lift(self, other) -> "Node":
        if isinstance(other, Node):
            if other.tape is not self.tape:
                raise pinn_exception.ShapeError("Nodes belong to different tapes")
            return other
        return self.tape.constant(other)

    def __add__(self, other):
        return add(self, self._lift(other))

    def __radd__(self, other):
        return add(self._lift(other), self)

    def __sub__(self, other):
        return sub(self, self._lift(other))

    def __rsub__(self, other):
        return sub(self._lift(other), self)

    def __mul__(self, other):
        return mul(self, self._lift(other))

    def __rmul__(self, other):
        return mul(self._lift(other), self)

    def __truediv__(self, other):
        return div(self, self._lift(other))

    def __rtruediv__(self, other):
        return div(self._lift(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, exponent: float):
        return power(self, exponent)


class Tape(object):
    """
    Append-only record of one forward pass. A new tape is built for every loss evaluation.
    """

    def __init__(self):
        self.nodes: list[Node] = []

    def __len__(self):
        return len(self.nodes)

    def record(self, op: str, value: np.ndarray, parents: tuple[Node, ...], vjp: Optional[Vjp]) -> Node:
        requires_grad = any(parent.requires_grad for parent in parents)
        node = Node(self, op, value, parents, vjp if requires_grad else None, requires_grad)
        self.nodes.append(node)
        return node

    def constant(self, value) -> Node:
        node = Node(self, "const", np.asarray(value, dtype=np.float64), (), None, False)
        self.nodes.append(node)
        return node

    def variable(self, value) -> Node:
        node = Node(self, "var", np.array(value, dtype=np.float64), (), None, True)
        self.nodes.append(node)
        return node

    def backward(self, output: Node) -> None:
        """
        Reverse sweep from a scalar output. Gradients of variables are left in ``node.grad``;
        variables the output does not depend on get an all-zero gradient.

        :param output: node holding a single value.
        """
        if output.tape is not self:
            raise pinn_exception.ShapeError("Output node belongs to another tape")
        if output.value.size != 1:
            raise pinn_exception.ShapeError(f"Backward needs a scalar output, got shape {output.shape}")
        for node in self.nodes:
            if node.op == "var":
                node.grad = np.zeros_like(node.value)
        if not output.requires_grad:
            return
        adjoints: dict[int, np.ndarray] = {output.index: np.ones_like(output.value)}
        for node in reversed(self.nodes[:output.index + 1]):
            adjoint = adjoints.pop(node.index, None)
            if adjoint is None:
                continue
            if not (np.all(np.isfinite(adjoint)) and np.all(np.isfinite(node.value))):
                raise pinn_exception.NumericError(
                    f"Non-finite value in reverse sweep at node {node.index} ({node.op})", location=node.index)
            if node.op == "var":
                node.grad = node.grad + adjoint
                continue
            for parent, parent_adjoint in zip(node.parents, node.vjp(adjoint)):
                if parent_adjoint is None or not parent.requires_grad:
                    continue
                if parent.index in adjoints:
                    adjoints[parent.index] = adjoints[parent.index] + parent_adjoint
                else:
                    adjoints[parent.index] = parent_adjoint
        logger.trace("Reverse sweep over {} nodes", len(self.nodes))


def add(a: Node, b: Node) -> Node:
    return a.tape.record("add", a.value + b.value, (a, b),
                         lambda g: (_unbroadcast(g, a.shape), _unbroadcast(g, b.shape)))


def sub(a: Node, b: Node) -> Node:
    return a.tape.record("sub", a.value - b.value, (a, b),
                         lambda g: (_unbroadcast(g, a.shape), _unbroadcast(-g, b.shape)))


def mul(a: Node, b: Node) -> Node:
    return a.tape.record("mul", a.value * b.value, (a, b),
                         lambda g: (_unbroadcast(g * b.value, a.shape), _unbroadcast(g * a.value, b.shape)))


def div(a: Node, b: Node) -> Node:
    if np.any(b.value == 0.0):
        raise pinn_exception.SingularityError(f"Division by zero at node {b.index}")
    out = a.value / b.value
    return a.tape.record("div", out, (a, b),
                         lambda g: (_unbroadcast(g / b.value, a.shape), _unbroadcast(-g * out / b.value, b.shape)))


def neg(a: Node) -> Node:
    return a.tape.record("neg", -a.value, (a,), lambda g: (-g,))


def power(a: Node, exponent: float) -> Node:
    if exponent == 0:
        return a.tape.constant(np.ones_like(a.value))
    if exponent == 1:
        return a
    return a.tape.record(f"pow{exponent:g}", a.value ** exponent, (a,),
                         lambda g: (g * exponent * a.value ** (exponent - 1),))


def exp(a: Node) -> Node:
    out = np.exp(a.value)
    return a.tape.record("exp", out, (a,), lambda g: (g * out,))


def tanh(a: Node) -> Node:
    out = np.tanh(a.value)
    return a.tape.record("tanh", out, (a,), lambda g: (g * (1.0 - out * out),))


def sigmoid(a: Node) -> Node:
    out = expit(a.value)
    return a.tape.record("sigmoid", out, (a,), lambda g: (g * out * (1.0 - out),))


def relu(a: Node) -> Node:
    mask = (a.value > 0.0).astype(np.float64)
    return a.tape.record("relu", a.value * mask, (a,), lambda g: (g * mask,))


def step(a: Node) -> Node:
    """Heaviside step of the node value, as a constant (its derivative is zero almost everywhere)."""
    return a.tape.constant((a.value > 0.0).astype(np.float64))


def matmul(w: Node, x: Node) -> Node:
    return w.tape.record("matmul", w.value @ x.value, (w, x),
                         lambda g: (g @ x.value.T, w.value.T @ g))


def stack(nodes: Sequence[Node]) -> Node:
    tape = nodes[0].tape
    value = np.stack([node.value for node in nodes])
    return tape.record("stack", value, tuple(nodes), lambda g: tuple(g[i] for i in range(len(nodes))))


def row(a: Node, i: int) -> Node:
    def vjp(g):
        full = np.zeros_like(a.value)
        full[i] = g
        return (full,)
    return a.tape.record(f"row{i}", a.value[i], (a,), vjp)


def block(a: Node, start: int, shape: tuple[int, ...]) -> Node:
    """
    Contiguous slice of a flat node reshaped to ``shape``. Used to cut weight matrices and
    bias vectors out of the flat parameter vector.
    """
    size = int(np.prod(shape))
    stop = start + size

    def vjp(g):
        full = np.zeros_like(a.value)
        full[start:stop] = g.reshape(-1)
        return (full,)
    return a.tape.record("block", a.value[start:stop].reshape(shape), (a,), vjp)


def total(a: Node) -> Node:
    return a.tape.record("sum", np.asarray(a.value.sum()), (a,), lambda g: (np.broadcast_to(g, a.shape).copy(),))


def mean(a: Node) -> Node:
    n = a.value.size
    return a.tape.record("mean", np.asarray(a.value.sum() / n), (a,),
                         lambda g: (np.broadcast_to(g / n, a.shape).copy(),))


def param_gradient(loss: Node, params: Node) -> np.ndarray:
    """
    Gradient of a scalar loss with respect to the flat parameter vector.

    :param loss: scalar node built on the same tape as ``params``,
    :param params: variable node holding the ParamVector.
    :return: array of the same length as the ParamVector, zero where the loss does not
             depend on a parameter.
    """
    if params.op != "var":
        raise pinn_exception.ShapeError("Parameters must be a tape variable")
    loss.tape.backward(loss)
    return params.grad.copy()
