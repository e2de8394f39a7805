# coding=utf-8
"""
Fully-connected feed-forward network over (space, time) coordinates.

Parameters live in one flat float64 vector (the ParamVector) ordered layer by layer, each
layer contributing its weight matrix row-major (fan_out rows, fan_in columns) followed by
its bias vector.
"""
import struct
from typing import Sequence

import numpy as np
from loguru import logger
from scipy.special import expit

import pinn_bench.autodiff_jet as jets
import pinn_bench.autodiff_tape as ad
import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.autodiff_jet import Jet
from pinn_bench.autodiff_tape import Node
from pinn_bench.model.classes.mlp_config import Activation, MlpConfig
from pinn_bench.pinn_bench_consts import Consts

ParamVector = np.ndarray

_HEADER = struct.Struct("<4sIQ")

_JET_ACTIVATIONS = {
    Activation.SIGMOID: jets.sigmoid,
    Activation.TANH: jets.tanh,
    Activation.RELU: jets.relu,
}

_ARRAY_ACTIVATIONS = {
    Activation.SIGMOID: expit,
    Activation.TANH: np.tanh,
    Activation.RELU: lambda z: z * (z > 0.0),
}


def param_count(config: MlpConfig) -> int:
    return config.param_count()


def init_params(config: MlpConfig, seed: int) -> ParamVector:
    """
    Glorot-uniform weights and zero biases, drawn layer by layer from a PCG64 generator.

    :param config: network shape,
    :param seed: generator seed.
    :return: the ParamVector.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    chunks = []
    for fan_out, fan_in in config.layer_shapes():
        limit = np.sqrt(6.0 / (fan_in + fan_out))
        chunks.append(rng.uniform(-limit, limit, size=fan_out * fan_in))
        chunks.append(np.zeros(fan_out))
    params = np.concatenate(chunks)
    logger.debug("Initialized {} parameters for {}", params.size, config)
    return params


def _check_length(config: MlpConfig, length: int) -> None:
    if length != config.param_count():
        raise pinn_exception.ShapeError(
            f"ParamVector has {length} entries, network {config} needs {config.param_count()}")


def forward(config: MlpConfig, params: Node | ParamVector, inputs: Sequence[Jet]) -> list[Jet]:
    """
    Propagates input jets through the network.

    :param config: network shape,
    :param params: tape variable holding the ParamVector, or a plain array (recorded as a constant),
    :param inputs: one Jet per input coordinate, all of the same order and lane count.
    :return: one Jet per output field.
    """
    if len(inputs) != config.input_dim:
        raise pinn_exception.ShapeError(f"Network takes {config.input_dim} inputs, got {len(inputs)}")
    tape = inputs[0].tape
    if not isinstance(params, Node):
        params = tape.constant(params)
    _check_length(config, params.value.size)
    order = inputs[0].order
    activation = _JET_ACTIVATIONS[config.activation]

    layers = config.layer_shapes()
    coeffs = [ad.stack([jet[k] for jet in inputs]) for k in range(order + 1)]
    offset = 0
    for layer_index, (fan_out, fan_in) in enumerate(layers):
        weights = ad.block(params, offset, (fan_out, fan_in))
        offset += fan_out * fan_in
        bias = ad.block(params, offset, (fan_out, 1))
        offset += fan_out
        pre = [ad.matmul(weights, coeffs[0]) + bias] + [ad.matmul(weights, c) for c in coeffs[1:]]
        if layer_index < len(layers) - 1:
            coeffs = list(activation(Jet(pre)).coeffs)
        else:
            coeffs = pre
    return [Jet([ad.row(c, j) for c in coeffs]) for j in range(config.output_dim)]


def predict(config: MlpConfig, params: ParamVector, points: np.ndarray) -> np.ndarray:
    """
    Plain evaluation without a tape.

    :param config: network shape,
    :param params: the ParamVector,
    :param points: array of shape (n, input_dim).
    :return: array of shape (n, output_dim).
    """
    _check_length(config, params.size)
    activation = _ARRAY_ACTIVATIONS[config.activation]
    layers = config.layer_shapes()
    hidden = np.asarray(points, dtype=np.float64).T
    offset = 0
    for layer_index, (fan_out, fan_in) in enumerate(layers):
        weights = params[offset:offset + fan_out * fan_in].reshape(fan_out, fan_in)
        offset += fan_out * fan_in
        bias = params[offset:offset + fan_out].reshape(fan_out, 1)
        offset += fan_out
        hidden = weights @ hidden + bias
        if layer_index < len(layers) - 1:
            hidden = activation(hidden)
    return hidden.T


def save_params(params: ParamVector, file_path: str) -> None:
    """
    Writes the ParamVector as a 16-byte header (magic, version, length) followed by
    little-endian float64 values.
    """
    payload = np.asarray(params, dtype="<f8")
    with open(file_path, "wb") as file_object:
        file_object.write(_HEADER.pack(Consts.param_magic, Consts.param_version, payload.size))
        file_object.write(payload.tobytes())


def load_params(file_path: str) -> ParamVector:
    with open(file_path, "rb") as file_object:
        header = file_object.read(_HEADER.size)
        if len(header) != _HEADER.size:
            raise pinn_exception.ShapeError(f"{file_path}: truncated header")
        magic, version, length = _HEADER.unpack(header)
        if magic != Consts.param_magic:
            raise pinn_exception.ConfigurationError(f"{file_path}: not a parameter file")
        if version != Consts.param_version:
            raise pinn_exception.ConfigurationError(f"{file_path}: unsupported version {version}")
        payload = file_object.read()
    if len(payload) != 8 * length:
        raise pinn_exception.ShapeError(f"{file_path}: expected {length} values, found {len(payload) // 8}")
    return np.frombuffer(payload, dtype="<f8").astype(np.float64)
