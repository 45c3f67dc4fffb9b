import typing

import numpy as np
import numpy.typing as npt

from config.learn import Learner
from services.corpus import EntailmentClass
from services.metrics import accuracy

from ..models import MulticlassSvm
from ..multiclass import svm_fit_multiclass
from .abstract import BaseLearner


CLASSES: typing.Final = [c.value for c in EntailmentClass.ordered()]


class SvmLearner(BaseLearner):
    """One-vs-one Gaussian-kernel SVM over the raw features and the three entailment classes."""

    __slots__ = ()

    learner = Learner.SVM
    metric = "accuracy"

    def targets(self, y: typing.Sequence[typing.Any]) -> npt.NDArray[np.object_]:
        return np.asarray([EntailmentClass.parse(str(v)).value for v in y], dtype=object)

    def default_grid(self, X: npt.NDArray[np.float64], y: npt.NDArray) -> dict[str, list[float]]:
        return {"C": list(self.settings.grid_C), "gamma": list(self.settings.grid_gamma)}

    def fit(self, X: npt.NDArray[np.float64], y: npt.NDArray, params: typing.Mapping[str, float]) -> MulticlassSvm:
        return svm_fit_multiclass(
            X,
            list(y),
            C=params["C"],
            gamma=params["gamma"],
            tol=self.settings.smo_tol,
            max_steps=self.settings.smo_max_steps,
            cache_rows=self.settings.smo_cache_rows,
            classes=CLASSES,
        )

    def predict(self, model: MulticlassSvm, X: npt.NDArray[np.float64]) -> npt.NDArray[np.object_]:  # type: ignore
        return np.asarray(model.predict(X), dtype=object)

    def score(self, y_true: npt.NDArray, y_pred: npt.NDArray) -> float:
        return accuracy(list(y_pred), list(y_true))
