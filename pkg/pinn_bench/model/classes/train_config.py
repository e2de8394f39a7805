# coding=utf-8
"""
Classes used for representing training and sweep configurations
"""
from typing import Literal, Optional

from pydantic import Field, field_validator, model_validator

from pinn_bench.model.classes.base_config import BaseConfig
from pinn_bench.model.classes.mlp_config import Activation, MlpConfig
from pinn_bench.model.classes.optimizer_config import OptimizerConfig
from pinn_bench.pinn_bench_consts import Consts


class TrainConfig(BaseConfig):
    """
    One PINN training run.
    Fields:
    - problem, variant: problem identifier and preset variant,
    - network, optimizer: architecture and minimizer,
    - iterations: optimizer steps, 0 only evaluates the initial network,
    - n_data, n_interior: collocation counts,
    - seed: network initialization and sampling seed; ``seeds`` runs several seeds in turn,
    - validation_cadence: loss history is recorded every this many iterations,
    - loss_weights: weights of the initial, boundary and residual terms,
    - initial_only: all data on the initial slice, no boundary term,
    - resample: draw a fresh collocation set every iteration,
    - normalize_inputs: map each coordinate affinely onto [-1, 1] before the first layer,
    - eval_scale: divisor applied to the reference grid resolution for evaluation,
    - eval_times: time slices drawn in the comparison plot,
    - ic_seed: seed of random initial fields (Turing-2), shared with the reference run.
    - chunk_size: collocation rows per recorded tape; gradients of the chunks are summed.
    """
    schema_version: Literal[1] = Field(default=Consts.schema_version)
    problem: str = Field(description="Problem identifier")
    variant: Optional[str] = Field(default=None)
    network: MlpConfig = Field(default_factory=MlpConfig)
    optimizer: OptimizerConfig = Field(default_factory=OptimizerConfig)
    iterations: int = Field(default=1000, ge=0)
    n_data: int = Field(default=400, ge=1)
    n_interior: int = Field(default=1000, ge=0)
    seed: int = Field(default=0, ge=0)
    seeds: Optional[list[int]] = Field(default=None, min_length=1)
    validation_cadence: int = Field(default=100, ge=1)
    loss_weights: tuple[float, float, float] = Field(default=(1.0, 1.0, 1.0))
    initial_only: bool = Field(default=False)
    resample: bool = Field(default=False)
    normalize_inputs: bool = Field(default=True)
    eval_scale: int = Field(default=1, ge=1)
    eval_times: list[float] = Field(default_factory=list)
    ic_seed: int = Field(default=0, ge=0)
    chunk_size: int = Field(default=Consts.loss_chunk, ge=1)

    @model_validator(mode="after")
    def check_weights(self) -> "TrainConfig":
        if any(weight < 0.0 for weight in self.loss_weights):
            raise ValueError("Loss weights must not be negative")
        return self

    def seed_list(self) -> list[int]:
        return list(self.seeds) if self.seeds else [self.seed]


class ExperimentConfig(BaseConfig):
    """
    Layers x neurons sweep of one problem, every cell trained once per seed.
    """
    schema_version: Literal[1] = Field(default=Consts.schema_version)
    problem: str
    variant: Optional[str] = Field(default=None)
    layers: list[int] = Field(min_length=1)
    neurons: list[int] = Field(min_length=1)
    activation: Activation = Field(default=Activation.SIGMOID)
    optimizer: OptimizerConfig = Field(default_factory=OptimizerConfig)
    iterations: int = Field(default=1000, ge=0)
    n_data: int = Field(default=400, ge=1)
    n_interior: int = Field(default=1000, ge=0)
    seeds: list[int] = Field(default_factory=lambda: [0], min_length=1)
    validation_cadence: int = Field(default=100, ge=1)
    initial_only: bool = Field(default=False)
    eval_scale: int = Field(default=1, ge=1)
    output_dir: Optional[str] = Field(default=None)

    @field_validator("activation", mode="before")
    @classmethod
    def parse_activation(cls, value):
        return Activation.parse(value) if isinstance(value, str) else value

    @model_validator(mode="after")
    def check_axes(self) -> "ExperimentConfig":
        if any(value < 1 for value in self.layers + self.neurons):
            raise ValueError("Layer and neuron counts must be positive")
        return self

    def cells(self) -> list[tuple[int, int, int]]:
        """
        :return: (layers, neurons, seed) for every run, layers varying slowest.
        """
        return [(layers, neurons, seed) for layers in self.layers for neurons in self.neurons for seed in self.seeds]

    def train_config(self, layers: int, neurons: int, seed: int, input_dim: int, output_dim: int) -> TrainConfig:
        return TrainConfig(problem=self.problem, variant=self.variant,
                           network=MlpConfig(input_dim=input_dim, hidden_layers=layers, hidden_width=neurons,
                                             output_dim=output_dim, activation=self.activation),
                           optimizer=self.optimizer, iterations=self.iterations, n_data=self.n_data,
                           n_interior=self.n_interior, seed=seed, validation_cadence=self.validation_cadence,
                           initial_only=self.initial_only, eval_scale=self.eval_scale)
