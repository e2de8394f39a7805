# coding=utf-8
"""
Base classes for every pydantic model of the package
"""

from pydantic import BaseModel, ConfigDict


class BaseConfig(BaseModel):
    """
    Base class of configuration and parameter models. Unknown keys are rejected so that
    typos in JSON configs fail loudly instead of silently falling back to defaults.
    """
    model_config = ConfigDict(extra="forbid")


class ArrayModel(BaseModel):
    """
    Base class of models carrying numpy arrays.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)
