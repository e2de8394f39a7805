# coding=utf-8
"""
Class used for representing the shape of a fully-connected network
"""
from enum import Enum
from typing import Literal

from pydantic import Field, field_validator

from pinn_bench.model.classes.base_config import BaseConfig


class Activation(Enum):
    SIGMOID = "sigmoid"
    TANH = "tanh"
    RELU = "relu"

    @classmethod
    def parse(cls, value: str) -> "Activation":
        value_lower = value.lower()
        for member in cls:
            if member.name.lower() == value_lower or str(member.value).lower() == value_lower:
                return member
        raise ValueError(f"Invalid Activation value: {value}")


class MlpConfig(BaseConfig):
    """
    Fields:
    - input_dim: number of coordinates fed to the network (space and time axes),
    - hidden_layers: number of hidden layers,
    - hidden_width: neurons per hidden layer,
    - output_dim: number of predicted fields,
    - activation: nonlinearity applied on hidden layers, the final layer is always linear.
    """
    input_dim: Literal[1, 2, 3] = Field(default=2, description="Number of input coordinates")
    hidden_layers: int = Field(default=4, ge=1, description="Number of hidden layers")
    hidden_width: int = Field(default=16, ge=1, description="Neurons per hidden layer")
    output_dim: Literal[1, 2] = Field(default=1, description="Number of output fields")
    activation: Activation = Field(default=Activation.SIGMOID, description="Hidden-layer activation")

    @field_validator("activation", mode="before")
    @classmethod
    def parse_activation(cls, value):
        return Activation.parse(value) if isinstance(value, str) else value

    def layer_shapes(self) -> list[tuple[int, int]]:
        """
        :return: (fan_out, fan_in) of every affine layer, input layer first.
        """
        sizes = [self.input_dim] + [self.hidden_width] * self.hidden_layers + [self.output_dim]
        return [(sizes[i + 1], sizes[i]) for i in range(len(sizes) - 1)]

    def param_count(self) -> int:
        return sum(fan_out * fan_in + fan_out for fan_out, fan_in in self.layer_shapes())
