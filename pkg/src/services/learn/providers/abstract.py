import typing
from abc import ABC, abstractmethod

import numpy as np
import numpy.typing as npt

from config.learn import Learner, Task

from ..models import TrainedModel
from ..settings import SolverSettings


class BaseLearner(ABC):
    """Base class for a learner: how to build its default grid, fit it with one parameter set and score it."""

    __slots__ = ("settings",)

    learner: typing.ClassVar[Learner]
    metric: typing.ClassVar[str]
    """Name of the cross-validation score, larger is better."""

    def __init__(self, settings: SolverSettings):
        self.settings = settings

    @property
    def task(self) -> Task:
        return self.learner.task

    @abstractmethod
    def targets(self, y: typing.Sequence[typing.Any]) -> npt.NDArray:
        """The training targets in the form `fit()` and `score()` expect."""

    @abstractmethod
    def default_grid(self, X: npt.NDArray[np.float64], y: npt.NDArray) -> dict[str, list[float]]:
        """The parameter lists to search when no grid is given, keyed by `learner.hyperparameters`."""

    @abstractmethod
    def fit(self, X: npt.NDArray[np.float64], y: npt.NDArray, params: typing.Mapping[str, float]) -> TrainedModel:
        """Train a model with one parameter combination."""

    @abstractmethod
    def predict(self, model: TrainedModel, X: npt.NDArray[np.float64]) -> npt.NDArray:
        """Raw predictions: unclamped reals for regression, class names for classification."""

    @abstractmethod
    def score(self, y_true: npt.NDArray, y_pred: npt.NDArray) -> float:
        """The cross-validation score of a fold."""
