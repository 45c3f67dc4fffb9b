import enum
import typing

import pydantic
from pydantic_settings import SettingsConfigDict

from . import _utils


class Task(enum.StrEnum):
    """The two tasks of the competition."""

    SIMILARITY = "similarity"
    ENTAILMENT = "entailment"


class Learner(enum.StrEnum):
    """A learner and the only task it can be trained for."""

    LASSO = ("lasso", Task.SIMILARITY, ("lambda",))
    SVR = ("svr", Task.SIMILARITY, ("C", "gamma", "epsilon"))
    SVM = ("svm", Task.ENTAILMENT, ("C", "gamma"))

    def __new__(cls, name: str, task: Task, hyperparameters: tuple[str, ...]):
        member = str.__new__(cls, name)
        member._value_ = name
        return member

    def __init__(self, name: str, task: Task, hyperparameters: tuple[str, ...]):
        self.task = task
        self.hyperparameters = hyperparameters


class LearnConfig(_utils.BaseSettings):
    """Configs for the solvers, the default parameter grids and the cross validation."""

    model_config = SettingsConfigDict(env_prefix="ASSIN_LEARN_")

    LASSO_TOL: pydantic.PositiveFloat = 1e-6
    LASSO_MAX_SWEEPS: pydantic.PositiveInt = 10_000
    LASSO_LAMBDA_COUNT: pydantic.PositiveInt = 20
    """Size of the log-spaced λ ladder, from λ_max down to λ_max * `LASSO_LAMBDA_RATIO`."""
    LASSO_LAMBDA_RATIO: float = pydantic.Field(1e-4, gt=0, lt=1)

    SMO_TOL: pydantic.PositiveFloat = 1e-3
    SMO_MAX_STEPS: pydantic.PositiveInt = 10_000_000
    SMO_CACHE_ROWS: pydantic.PositiveInt = 4096
    """How many kernel rows the SMO solver keeps in memory."""

    GRID_C: list[pydantic.PositiveFloat] = [0.1, 1.0, 10.0, 100.0]
    GRID_GAMMA: list[pydantic.PositiveFloat] = [1 / 15, 0.01, 0.1, 1.0]
    GRID_EPSILON: list[pydantic.NonNegativeFloat] = [0.05, 0.1, 0.2]

    CV_FOLDS: pydantic.PositiveInt = 5
    SEED: int = 42
    WORKERS: pydantic.PositiveInt = 1

    @pydantic.model_validator(mode="after")
    def _validate_grids(self) -> typing.Self:
        _utils.require_values(self, "GRID_C", "GRID_GAMMA", "GRID_EPSILON")
        return self
